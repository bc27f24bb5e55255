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

#include <complex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symcheck {

/// Two-mode number basis truncated at `cutoff` quanta per mode, states
/// (n1, n2) ordered lexicographically; dimension (cutoff+1)^2.
class FockBasis {
public:
    explicit FockBasis(int cutoff);

    int cutoff() const { return cutoff_; }
    int dim() const { return (cutoff_ + 1) * (cutoff_ + 1); }

    int index(int n1, int n2) const { return n1 * (cutoff_ + 1) + n2; }
    std::pair<int, int> state(int index) const {
        return {index / (cutoff_ + 1), index % (cutoff_ + 1)};
    }

    bool operator==(const FockBasis& o) const { return cutoff_ == o.cutoff_; }

private:
    int cutoff_;
};

/// Exact matrix realization of a two-mode boson operator, together with
/// the set of (dn1, dn2) quanta shifts it induces.
class FockOperator {
public:
    FockOperator(FockBasis basis, CMatrix matrix, std::set<std::pair<int, int>> quanta_delta);

    const FockBasis& basis() const { return basis_; }
    const CMatrix& matrix() const { return matrix_; }
    const std::set<std::pair<int, int>>& quanta_delta() const { return quanta_delta_; }

    /// Largest per-mode shift over all declared deltas.
    int max_shift() const;

    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator*(const FockOperator& o) const;
    FockOperator scaled(const CScalar& s) const;
    FockOperator dagger() const;

private:
    FockBasis basis_;
    CMatrix matrix_;
    std::set<std::pair<int, int>> quanta_delta_;
};

enum class LadderKind { lower, raise_ };

/// a or a-dagger for mode 1 or 2; entries are exact sqrt(n) surds.
FockOperator ladder(int mode, LadderKind kind, const FockBasis& basis);

/// x_i and p_i built from the ladder operators; both Hermitian.
std::pair<FockOperator, FockOperator> position_momentum(int mode, const FockBasis& basis);

/// The ten quadratic generators {Q3, S3, K3, L1, L2, L3, K1, K2, Q1, Q2},
/// Hermitian on the full truncated space.  Requires cutoff >= 4.
std::vector<std::pair<std::string, FockOperator>> build_ten_generators(const FockBasis& basis);

/// Projector onto states with n1 <= N-margin and n2 <= N-margin, inside
/// which truncated products agree with their untruncated values.
CMatrix safe_projector(const FockBasis& basis, int margin);

struct SafeCommutatorReport {
    bool pass = false;
    std::string residual; // nonzero entries of P([A,B]-expected)P, by state
};

/// Exact comparison of P (AB - BA) P with P expected P on the safe
/// subspace.  Errors if either operator shifts more than `margin` quanta.
SafeCommutatorReport safe_commutator_check(const FockOperator& a, const FockOperator& b,
                                           const FockOperator& expected, int margin);

/// Numerical exp(-i t G) state, via sub-stepped Taylor matrix-vector
/// products on the operator's sparse entries.
std::vector<std::complex<double>> evolve(const std::vector<std::complex<double>>& state,
                                         const FockOperator& generator, double t);

/// State vector JSON import/export: array of (n1, n2, re, im) records.
std::vector<std::complex<double>> load_state_json(const std::string& path,
                                                  const FockBasis& basis);
void save_state_json(const std::vector<std::complex<double>>& state, const FockBasis& basis,
                     const std::string& path);

} // namespace symcheck
