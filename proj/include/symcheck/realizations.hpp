/*
 * Copyright 2026 The symcheck Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include "symcheck/lie.hpp"

#include <string>

namespace symcheck {

/// First-order differential operator -i * x_a A_{ab} d/dx_b on phase-space
/// coordinates (x, p), held by its 2x2 coefficient matrix A.  The operator
/// preserves degree-1 monomials; rep_matrix() is its action on the basis
/// (x, p), a faithful representation (commutators map to commutators).
class DiffOpGenerator {
public:
    explicit DiffOpGenerator(CMatrix coeff) : coeff_(std::move(coeff)) {
        if (coeff_.dim() != 2) throw std::invalid_argument("DiffOpGenerator: coeff must be 2x2");
    }

    const CMatrix& coeff() const { return coeff_; }

    /// Matrix of the operator on the monomial basis (x, p): -i * A.
    CMatrix rep_matrix() const { return coeff_.scaled(-CScalar::i()); }

    /// Applies the operator to a degree-1 polynomial given by its (x, p)
    /// coefficient vector; independent symbolic-action oracle path.
    std::vector<CScalar> apply_to_linear(const std::vector<CScalar>& poly) const;

    /// Vector-field commutator lemma: [G1, G2] has coefficient -i[A1, A2].
    static DiffOpGenerator commutator(const DiffOpGenerator& a, const DiffOpGenerator& b) {
        return DiffOpGenerator(symcheck::commutator(a.coeff_, b.coeff_).scaled(-CScalar::i()));
    }

private:
    CMatrix coeff_;
};

enum class FamilyKind { diffop, matrix4_minkowski, sp4_phase_space, so32_5d, fock };

struct GeneratorFamily {
    std::string name;
    FamilyKind kind;
    LieBasis basis;
};

/// {J2, K1, K3} as phase-space differential operators.
GeneratorFamily build_sp2_diffop();
/// Coefficient matrices of the same triple, for the diffop-specific API.
std::vector<std::pair<std::string, DiffOpGenerator>> sp2_diffop_generators();

/// The three 4x4 SO(2,1) matrices acting on Minkowskian (x, y, z, t).
GeneratorFamily build_so21_minkowski();

/// Ten 4x4 Sp(4) generators on (x1, p1, x2, p2), block pattern x Pauli.
GeneratorFamily build_sp4_phase_space();

/// Ten 5x5 SO(3,2) generators on (x, y, z, t, s), metric (+,+,+,-,-):
/// rotations {Jx, Jy, Jz}, t-boosts {Ax, Ay, Az}, s-boosts {Bx, By, Bz},
/// and the t-s rotation Bt.
GeneratorFamily build_so32_5d();

/// The 4x4 symplectic form J on (x1, p1, x2, p2), exact.
CMatrix symplectic_form_exact();

/// Exports a family to the JSON matrix format
/// {name, dim, entries: [{row, col, re, im}]} with surd-string scalars.
void export_family_json(const GeneratorFamily& family, const std::string& path);

} // namespace symcheck
