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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcheck/fock.hpp"
#include "symcheck/tables.hpp"

#include <cmath>
#include <cstdio>
#include <map>

using namespace symcheck;

namespace {

FockOperator expected_combo(const std::vector<std::pair<std::string, FockOperator>>& gens,
                            const StructureConstants& table, const std::string& a,
                            const std::string& b) {
    int ia = table.index_of(a), ib = table.index_of(b);
    FockOperator sum = gens.front().second.scaled(CScalar());
    for (auto& [label, op] : gens) {
        CScalar c = table.coeff(ia, ib, table.index_of(label));
        if (!c.is_zero()) sum = sum + op.scaled(c);
    }
    return sum;
}

} // namespace

TEST_CASE("basis indexing") {
    FockBasis b(4);
    CHECK(b.dim() == 25);
    CHECK(b.index(2, 3) == 13);
    CHECK(b.state(13) == std::pair<int, int>(2, 3));
    CHECK_THROWS(FockBasis(0));
}

TEST_CASE("ladder operators carry exact sqrt entries") {
    FockBasis b(4);
    FockOperator a1 = ladder(1, LadderKind::lower, b);
    // <n-1| a |n> = sqrt(n)
    CHECK(a1.matrix()(b.index(2, 0), b.index(3, 0)) == CScalar(Surd::sqrt_of(3)));
    CHECK(a1.matrix()(b.index(0, 2), b.index(1, 2)) == CScalar(Surd(1)));
    // the raising operator drops the edge transition entirely
    FockOperator a1d = ladder(1, LadderKind::raise_, b);
    CHECK(a1d.matrix()(b.index(4, 0), b.index(3, 0)) == CScalar(Surd::sqrt_of(4)));
    CHECK(a1d.dagger().matrix() == a1.matrix());
}

TEST_CASE("canonical commutators on the safe subspace") {
    FockBasis b(5);
    FockOperator a1  = ladder(1, LadderKind::lower, b);
    FockOperator a1d = ladder(1, LadderKind::raise_, b);
    FockOperator a2  = ladder(2, LadderKind::lower, b);
    FockOperator unit =
        FockOperator(b, CMatrix::identity(b.dim()), {{0, 0}});
    // [a1, a1d] = 1, [a1, a2] = 0
    CHECK(safe_commutator_check(a1, a1d, unit, 1).pass);
    CHECK(safe_commutator_check(a1, a2, unit.scaled(CScalar()), 1).pass);

    auto [x1, p1] = position_momentum(1, b);
    CHECK(x1.dagger().matrix() == x1.matrix());
    CHECK(p1.dagger().matrix() == p1.matrix());
    // [x, p] = i
    CHECK(safe_commutator_check(x1, p1, unit.scaled(CScalar::i()), 1).pass);
}

TEST_CASE("ten-generator closure at cutoff 4, margin 2") {
    FockBasis b(4);
    auto gens = build_ten_generators(b);
    StructureConstants table = tables::bundled("so32");
    REQUIRE(gens.size() == 10);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto r = safe_commutator_check(gens[i].second, gens[j].second,
                                           expected_combo(gens, table, gens[i].first,
                                                          gens[j].first),
                                           2);
            INFO("[", gens[i].first, ",", gens[j].first, "] ", r.residual);
            CHECK(r.pass);
        }
}

TEST_CASE("truncation artifacts appear without the safe projector") {
    FockBasis b(4);
    auto gens = build_ten_generators(b);
    StructureConstants table = tables::bundled("so32");
    std::map<std::string, FockOperator> by_name(gens.begin(), gens.end());
    CMatrix full = commutator(by_name.at("K1").matrix(), by_name.at("Q1").matrix());
    CMatrix expected = expected_combo(gens, table, "K1", "Q1").matrix();
    CHECK(full != expected); // edge states are corrupted by the cutoff
}

TEST_CASE("safe check rejects an insufficient margin") {
    FockBasis b(4);
    auto gens = build_ten_generators(b);
    std::map<std::string, FockOperator> by_name(gens.begin(), gens.end());
    // K1 shifts two quanta; margin 1 violates the precondition
    CHECK_THROWS(safe_commutator_check(by_name.at("K1"), by_name.at("Q1"),
                                       by_name.at("K1").scaled(CScalar()), 1));
}

TEST_CASE("S3 spectrum on the vacuum") {
    FockBasis b(4);
    auto gens = build_ten_generators(b);
    std::map<std::string, FockOperator> by_name(gens.begin(), gens.end());
    const CMatrix& s3 = by_name.at("S3").matrix();
    // S3 |0,0> = 1/2 |0,0>
    for (int r = 0; r < b.dim(); ++r)
        CHECK(s3(r, b.index(0, 0)) ==
              (r == b.index(0, 0) ? CScalar(Rational(1, 2)) : CScalar()));
}

TEST_CASE("numeric evolution preserves norm and respects mode support") {
    FockBasis b(6);
    auto gens = build_ten_generators(b);
    std::map<std::string, FockOperator> by_name(gens.begin(), gens.end());

    std::vector<std::complex<double>> vac(b.dim());
    vac[b.index(0, 0)] = 1.0;
    auto out = evolve(vac, by_name.at("S3"), 0.37);
    // S3 is diagonal: evolution only rotates the vacuum phase
    CHECK(std::abs(std::abs(out[b.index(0, 0)]) - 1.0) < 1e-10);

    // K3 = -(1/2)(a1 a2 + a1d a2d): pair creation keeps n1 == n2
    auto squeezed = evolve(vac, by_name.at("K3"), 0.2);
    double norm = 0, off_diag = 0;
    for (int idx = 0; idx < b.dim(); ++idx) {
        norm += std::norm(squeezed[idx]);
        auto [n1, n2] = b.state(idx);
        if (n1 != n2) off_diag += std::abs(squeezed[idx]);
    }
    CHECK(std::abs(norm - 1.0) < 1e-6); // small cutoff leakage only
    CHECK(off_diag == 0.0);
    CHECK(std::abs(squeezed[b.index(1, 1)]) > 0.01);
}

TEST_CASE("state JSON round trip") {
    FockBasis b(4);
    std::vector<std::complex<double>> state(b.dim());
    state[b.index(1, 2)] = {0.25, -0.5};
    state[b.index(0, 0)] = {1.0, 0.0};
    std::string path = "state_roundtrip.json";
    save_state_json(state, b, path);
    auto back = load_state_json(path, b);
    REQUIRE(back.size() == state.size());
    for (int i = 0; i < b.dim(); ++i) CHECK(std::abs(back[i] - state[i]) < 1e-15);
    std::remove(path.c_str());
}
