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
#include "symcheck/fock.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace symcheck {

FockBasis::FockBasis(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("FockBasis: cutoff must be >= 1");
}

FockOperator::FockOperator(FockBasis basis, CMatrix matrix,
                           std::set<std::pair<int, int>> quanta_delta)
    : basis_(basis), matrix_(std::move(matrix)), quanta_delta_(std::move(quanta_delta)) {
    if (matrix_.dim() != basis_.dim())
        throw std::invalid_argument("FockOperator: matrix/basis dimension mismatch");
    // Entries must vanish outside the declared shifts.
    for (int r = 0; r < matrix_.dim(); ++r)
        for (int c = 0; c < matrix_.dim(); ++c) {
            if (matrix_(r, c).is_zero()) continue;
            auto [rn1, rn2] = basis_.state(r);
            auto [cn1, cn2] = basis_.state(c);
            if (!quanta_delta_.count({rn1 - cn1, rn2 - cn2}))
                throw std::invalid_argument("FockOperator: entry outside declared quanta shifts");
        }
}

int FockOperator::max_shift() const {
    int m = 0;
    for (auto& [d1, d2] : quanta_delta_) m = std::max({m, std::abs(d1), std::abs(d2)});
    return m;
}

namespace {

std::set<std::pair<int, int>> sum_deltas(const std::set<std::pair<int, int>>& a,
                                         const std::set<std::pair<int, int>>& b) {
    std::set<std::pair<int, int>> out(a);
    out.insert(b.begin(), b.end());
    return out;
}

std::set<std::pair<int, int>> product_deltas(const std::set<std::pair<int, int>>& a,
                                             const std::set<std::pair<int, int>>& b) {
    std::set<std::pair<int, int>> out;
    for (auto& [a1, a2] : a)
        for (auto& [b1, b2] : b) out.insert({a1 + b1, a2 + b2});
    return out;
}

} // namespace

FockOperator FockOperator::operator+(const FockOperator& o) const {
    return FockOperator(basis_, matrix_ + o.matrix_, sum_deltas(quanta_delta_, o.quanta_delta_));
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
    return FockOperator(basis_, matrix_ - o.matrix_, sum_deltas(quanta_delta_, o.quanta_delta_));
}

FockOperator FockOperator::operator*(const FockOperator& o) const {
    return FockOperator(basis_, matrix_ * o.matrix_,
                        product_deltas(quanta_delta_, o.quanta_delta_));
}

FockOperator FockOperator::scaled(const CScalar& s) const {
    return FockOperator(basis_, matrix_.scaled(s), quanta_delta_);
}

FockOperator FockOperator::dagger() const {
    std::set<std::pair<int, int>> flipped;
    for (auto& [d1, d2] : quanta_delta_) flipped.insert({-d1, -d2});
    return FockOperator(basis_, matrix_.dagger(), flipped);
}

FockOperator ladder(int mode, LadderKind kind, const FockBasis& basis) {
    if (mode != 1 && mode != 2) throw std::invalid_argument("ladder: mode must be 1 or 2");
    const int N = basis.cutoff();
    CMatrix m(basis.dim());
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 <= N; ++n2) {
            int n = (mode == 1) ? n1 : n2;
            if (kind == LadderKind::lower) {
                if (n == 0) continue;
                int t1 = (mode == 1) ? n1 - 1 : n1;
                int t2 = (mode == 2) ? n2 - 1 : n2;
                m(basis.index(t1, t2), basis.index(n1, n2)) = CScalar(Surd::sqrt_of(n));
            } else {
                if (n == N) continue; // raising out of the truncated space drops
                int t1 = (mode == 1) ? n1 + 1 : n1;
                int t2 = (mode == 2) ? n2 + 1 : n2;
                m(basis.index(t1, t2), basis.index(n1, n2)) = CScalar(Surd::sqrt_of(n + 1));
            }
        }
    int d = (kind == LadderKind::lower) ? -1 : +1;
    std::set<std::pair<int, int>> delta{{mode == 1 ? d : 0, mode == 2 ? d : 0}};
    return FockOperator(basis, std::move(m), std::move(delta));
}

std::pair<FockOperator, FockOperator> position_momentum(int mode, const FockBasis& basis) {
    FockOperator a  = ladder(mode, LadderKind::lower, basis);
    FockOperator ad = ladder(mode, LadderKind::raise_, basis);
    const CScalar inv_sqrt2 = CScalar(Surd(Rational(1, 2)) * Surd::sqrt_of(2)); // 1/sqrt(2)
    FockOperator x = (a + ad).scaled(inv_sqrt2);
    FockOperator p = (ad - a).scaled(CScalar::i() * inv_sqrt2);
    return {x, p};
}

std::vector<std::pair<std::string, FockOperator>> build_ten_generators(const FockBasis& basis) {
    if (basis.cutoff() < 4)
        throw std::invalid_argument("build_ten_generators: cutoff must be >= 4 "
                                    "(safe subspace would be empty)");
    FockOperator a1  = ladder(1, LadderKind::lower, basis);
    FockOperator a1d = ladder(1, LadderKind::raise_, basis);
    FockOperator a2  = ladder(2, LadderKind::lower, basis);
    FockOperator a2d = ladder(2, LadderKind::raise_, basis);

    const CScalar i       = CScalar::i();
    const CScalar half    = CScalar(Rational(1, 2));
    const CScalar quarter = CScalar(Rational(1, 4));

    // Note the Q operators carry the opposite overall sign from some
    // printings; this choice is the one under which the ten close on the
    // SO(3,2) table and the (K3, Q3, S3) triple matches its table.
    FockOperator q3 = (a1 * a2 - a1d * a2d).scaled(i * half);
    FockOperator s3 = (a1d * a1 + a2 * a2d).scaled(half);
    FockOperator k3 = (a1d * a2d + a1 * a2).scaled(half);
    FockOperator l1 = (a1d * a2 + a2d * a1).scaled(half);
    FockOperator l2 = (a1d * a2 - a2d * a1).scaled(-i * half);
    FockOperator l3 = (a1d * a1 - a2d * a2).scaled(half);
    FockOperator k1 = (a1d * a1d + a1 * a1 - a2d * a2d - a2 * a2).scaled(-quarter);
    FockOperator k2 = (a1d * a1d - a1 * a1 + a2d * a2d - a2 * a2).scaled(i * quarter);
    FockOperator q1 = (a1d * a1d - a1 * a1 - a2d * a2d + a2 * a2).scaled(i * quarter);
    FockOperator q2 = (a1d * a1d + a1 * a1 + a2d * a2d + a2 * a2).scaled(quarter);

    return {{"Q3", q3}, {"S3", s3}, {"K3", k3}, {"L1", l1}, {"L2", l2},
            {"L3", l3}, {"K1", k1}, {"K2", k2}, {"Q1", q1}, {"Q2", q2}};
}

CMatrix safe_projector(const FockBasis& basis, int margin) {
    CMatrix p(basis.dim());
    for (int idx = 0; idx < basis.dim(); ++idx) {
        auto [n1, n2] = basis.state(idx);
        if (n1 <= basis.cutoff() - margin && n2 <= basis.cutoff() - margin)
            p(idx, idx) = CScalar(1);
    }
    return p;
}

SafeCommutatorReport safe_commutator_check(const FockOperator& a, const FockOperator& b,
                                           const FockOperator& expected, int margin) {
    if (a.max_shift() > margin || b.max_shift() > margin)
        throw std::invalid_argument("safe_commutator_check: margin smaller than the "
                                    "operators' quanta shifts");
    const FockBasis& basis = a.basis();
    CMatrix p        = safe_projector(basis, margin);
    CMatrix residual = p * (commutator(a.matrix(), b.matrix()) - expected.matrix()) * p;

    SafeCommutatorReport report;
    report.pass = residual.is_zero();
    if (!report.pass) {
        std::ostringstream os;
        bool first = true;
        for (int r = 0; r < residual.dim(); ++r)
            for (int c = 0; c < residual.dim(); ++c)
                if (!residual(r, c).is_zero()) {
                    auto [rn1, rn2] = basis.state(r);
                    auto [cn1, cn2] = basis.state(c);
                    if (!first) os << ", ";
                    os << "<(" << rn1 << "," << rn2 << ")|.|(" << cn1 << "," << cn2
                       << ")>=" << residual(r, c).to_string();
                    first = false;
                }
        report.residual = os.str();
    }
    return report;
}

std::vector<std::complex<double>> evolve(const std::vector<std::complex<double>>& state,
                                         const FockOperator& generator, double t) {
    const int dim = generator.basis().dim();
    if (int(state.size()) != dim) throw std::invalid_argument("evolve: state dimension mismatch");

    // Sparse triplets of the generator.
    struct Entry {
        int r, c;
        std::complex<double> v;
    };
    std::vector<Entry> entries;
    double norm_inf = 0;
    std::vector<double> row_sum(dim, 0.0);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            const CScalar& s = generator.matrix()(r, c);
            if (s.is_zero()) continue;
            auto v = s.to_complex();
            entries.push_back({r, c, v});
            row_sum[r] += std::abs(v);
        }
    for (double s : row_sum) norm_inf = std::max(norm_inf, s);

    auto apply = [&](const std::vector<std::complex<double>>& v) {
        std::vector<std::complex<double>> out(dim);
        for (auto& e : entries) out[e.r] += e.v * v[e.c];
        return out;
    };

    // exp(-i t G) v by Taylor series over sub-steps with |dt| * ||G|| <= 1.
    int steps = std::max(1, int(std::ceil(std::abs(t) * norm_inf)));
    std::complex<double> dt_factor(0.0, -t / steps);
    std::vector<std::complex<double>> v = state;
    for (int s = 0; s < steps; ++s) {
        std::vector<std::complex<double>> term = v, sum = v;
        for (int k = 1; k <= 40; ++k) {
            term = apply(term);
            double scale = 1.0 / k;
            double max_term = 0;
            for (int idx = 0; idx < dim; ++idx) {
                term[idx] *= dt_factor * scale;
                sum[idx] += term[idx];
                max_term = std::max(max_term, std::abs(term[idx]));
            }
            if (max_term < 1e-18) break;
        }
        v = std::move(sum);
    }
    return v;
}

std::vector<std::complex<double>> load_state_json(const std::string& path,
                                                  const FockBasis& basis) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    nlohmann::json j;
    in >> j;
    std::vector<std::complex<double>> state(basis.dim());
    for (auto& rec : j) {
        int n1 = rec.at(0).get<int>(), n2 = rec.at(1).get<int>();
        state[basis.index(n1, n2)] = {rec.at(2).get<double>(), rec.at(3).get<double>()};
    }
    return state;
}

void save_state_json(const std::vector<std::complex<double>>& state, const FockBasis& basis,
                     const std::string& path) {
    nlohmann::json j = nlohmann::json::array();
    for (int idx = 0; idx < basis.dim(); ++idx) {
        if (state[idx] == std::complex<double>(0.0)) continue;
        auto [n1, n2] = basis.state(idx);
        j.push_back({n1, n2, state[idx].real(), state[idx].imag()});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace symcheck
