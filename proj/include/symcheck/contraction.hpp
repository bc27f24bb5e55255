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
#include <vector>

namespace symcheck {

/// diag(1,1,1,1,eps) and its exact inverse in the Laurent ring.
class ContractionMatrix {
public:
    ContractionMatrix();

    const LMatrix& c() const { return c_; }
    const LMatrix& c_inverse() const { return c_inv_; }

    /// eps^(-k) * C^{-1} G C, the un-limited Laurent expression.
    LMatrix conjugated(const CMatrix& g, int k) const;

private:
    LMatrix c_, c_inv_;
};

/// Thrown when eps^(-k) C^{-1} G C keeps positive-degree terms, so the
/// eps -> infinity limit does not exist.
class DivergentContractionError : public std::runtime_error {
public:
    struct Term {
        int row, col, degree;
        std::string coefficient;
    };
    DivergentContractionError(std::string what, std::vector<Term> terms)
        : std::runtime_error(std::move(what)), offending(std::move(terms)) {}

    std::vector<Term> offending;
};

struct ContractedGenerator {
    std::string label;
    int scaling_exponent = 0;     // the 1/eps^k prefactor
    CMatrix limit;                // degree-0 coefficient of the expansion
};

/// eps -> infinity limit of eps^(-k) C^{-1} G C; throws
/// DivergentContractionError when positive-degree terms survive.
ContractedGenerator contract(const CMatrix& g, int k, const std::string& label = "");

/// Smallest k in {0, 1, ...} for which the limit converges.
ContractedGenerator auto_contract(const CMatrix& g, const std::string& label = "");

/// Ten Poincare generators: {Jx, Jy, Jz, Ax, Ay, Az} uncontracted (k=0)
/// plus the contracted translations {Bcx, Bcy, Bcz, Bct} (k=1).
LieBasis build_poincare_basis();

/// The per-generator exponents matching build_poincare_basis order.
std::vector<int> poincare_scaling_exponents();

/// exp of -i(a Bcx + b Bcy + c Bcz + d Bct), exactly: identity with last
/// column (a, b, c, d, 1).
CMatrix translation_matrix(const CScalar& a, const CScalar& b, const CScalar& c,
                           const CScalar& d);

struct InvarianceCheck {
    std::string description;
    bool pass = false;
};

/// Structural checks: translations fix the upper-left 4x4 block, and the
/// uncontracted generators carry no s-row or s-column.
std::vector<InvarianceCheck> invariance_check();

} // namespace symcheck
