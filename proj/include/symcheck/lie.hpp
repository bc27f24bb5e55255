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

#include "symcheck/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// Ordered, named family of generator matrices of equal dimension.
class LieBasis {
public:
    LieBasis(std::string name, std::vector<std::pair<std::string, CMatrix>> generators);

    const std::string& name() const { return name_; }
    int size() const { return int(generators_.size()); }
    int matrix_dim() const { return generators_.front().second.dim(); }

    const std::string& label(int i) const { return generators_[i].first; }
    const CMatrix& matrix(int i) const { return generators_[i].second; }
    int index_of(const std::string& label) const;

    std::vector<std::string> labels() const;

private:
    std::string name_;
    std::vector<std::pair<std::string, CMatrix>> generators_;
};

/// Sparse tensor c_{ij}^k with [G_i, G_j] = sum_k c_{ij}^k G_k,
/// antisymmetric in (i, j) by construction.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    int size() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(const std::string& label) const;

    void set(int i, int j, int k, const CScalar& c);
    CScalar coeff(int i, int j, int k) const;

    /// Entries with i < j, in deterministic (i, j, k) order.
    std::vector<std::tuple<int, int, int, CScalar>> entries() const;

    /// [G_i, G_j] as a coefficient vector over the basis.
    std::vector<CScalar> bracket_coeffs(int i, int j) const;

    bool antisymmetry_ok() const { return true; } // by construction
    bool jacobi_ok() const;

    bool operator==(const StructureConstants& o) const {
        return labels_ == o.labels_ && tensor_ == o.tensor_;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::array<int, 3>, CScalar> tensor_; // keyed with i < j
};

/// Thrown when a commutator falls outside the exact span of the basis.
class NotClosedError : public std::runtime_error {
public:
    NotClosedError(std::string lhs, std::string rhs, CMatrix residual, std::string what)
        : std::runtime_error(std::move(what)),
          lhs_label(std::move(lhs)),
          rhs_label(std::move(rhs)),
          residual(std::move(residual)) {}

    std::string lhs_label, rhs_label;
    CMatrix residual;
};

/// Exact span membership: solves sum_k x_k v_k = target by Gaussian
/// elimination over CScalar; nullopt when the target is outside the span.
std::optional<std::vector<CScalar>> solve_in_span(const std::vector<CMatrix>& vectors,
                                                  const CMatrix& target);

/// Exact coefficients of every commutator; throws NotClosedError naming
/// the offending pair when the basis does not close.
StructureConstants extract_structure_constants(const LieBasis& basis);

struct PairCheck {
    int i = 0, j = 0;
    bool pass = false;
    std::string residual; // exact entries of [Gi,Gj] - expected, empty on pass
};

struct ClosureReport {
    bool pass = false;
    std::vector<PairCheck> pairs; // ordered by (i, j), i < j
};

/// Compares every commutator against the expected tensor, exactly.
ClosureReport verify_closure(const LieBasis& basis, const StructureConstants& expected);

/// Signed relabeling G_i -> sign_i * H_{perm[i]}.
struct BasisMap {
    std::vector<int> perm;
    std::vector<int> signs; // +1 / -1
    std::string to_string(const std::vector<std::string>& src_labels,
                          const std::vector<std::string>& dst_labels) const;
};

/// Whether the map carries src structure constants exactly onto dst.
bool basis_map_valid(const StructureConstants& src, const StructureConstants& dst,
                     const BasisMap& map);

/// Exhaustive backtracking search over signed permutations, pruned by
/// per-generator commutator fingerprints.  Among all valid maps returns
/// the one with the fewest sign flips, ties broken by lexicographic
/// permutation then lexicographic sign pattern.  nullopt when no signed
/// permutation works.
std::optional<BasisMap> find_basis_map(const StructureConstants& src,
                                       const StructureConstants& dst);

} // namespace symcheck
