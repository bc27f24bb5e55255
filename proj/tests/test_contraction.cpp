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

#include "symcheck/contraction.hpp"
#include "symcheck/realizations.hpp"

#include <cmath>

using namespace symcheck;

namespace {

CMatrix single_i_entry(int r, int c) {
    CMatrix m(5);
    m(r, c) = CScalar::i();
    return m;
}

} // namespace

TEST_CASE("contracted boosts collapse to one-sided translations") {
    GeneratorFamily fam = build_so32_5d();
    auto& b = fam.basis;
    CHECK(contract(b.matrix(b.index_of("Bx")), 1).limit == single_i_entry(0, 4));
    CHECK(contract(b.matrix(b.index_of("By")), 1).limit == single_i_entry(1, 4));
    CHECK(contract(b.matrix(b.index_of("Bz")), 1).limit == single_i_entry(2, 4));
    CHECK(contract(b.matrix(b.index_of("Bt")), 1).limit == single_i_entry(3, 4));
}

TEST_CASE("rotations and t-boosts are untouched at k=0") {
    GeneratorFamily fam = build_so32_5d();
    for (auto& name : {"Jx", "Jy", "Jz", "Ax", "Ay", "Az"}) {
        const CMatrix& g = fam.basis.matrix(fam.basis.index_of(name));
        ContractedGenerator cg = auto_contract(g, name);
        CHECK(cg.scaling_exponent == 0);
        CHECK(cg.limit == g);
    }
}

TEST_CASE("divergence is detected structurally with entry provenance") {
    GeneratorFamily fam = build_so32_5d();
    const CMatrix& bx = fam.basis.matrix(fam.basis.index_of("Bx"));
    CHECK_THROWS_AS((void)contract(bx, 0), DivergentContractionError);
    try {
        (void)contract(bx, 0);
    } catch (const DivergentContractionError& e) {
        REQUIRE(e.offending.size() == 1);
        CHECK(e.offending[0].row == 0);
        CHECK(e.offending[0].col == 4);
        CHECK(e.offending[0].degree == 1);
    }
    CHECK(auto_contract(bx).scaling_exponent == 1);
}

TEST_CASE("contracted basis closes; translations commute") {
    LieBasis poincare = build_poincare_basis();
    StructureConstants sc = extract_structure_constants(poincare);
    CHECK(sc.jacobi_ok());
    const char* trans[4] = {"Bcx", "Bcy", "Bcz", "Bct"};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            CHECK(commutator(poincare.matrix(poincare.index_of(trans[a])),
                             poincare.matrix(poincare.index_of(trans[b])))
                      .is_zero());
}

TEST_CASE("contraction leaves the Lorentz structure constants unchanged") {
    LieBasis poincare     = build_poincare_basis();
    GeneratorFamily so32  = build_so32_5d();
    std::vector<std::pair<std::string, CMatrix>> contracted, original;
    for (auto& l : {"Jx", "Jy", "Jz", "Ax", "Ay", "Az"}) {
        contracted.emplace_back(l, poincare.matrix(poincare.index_of(l)));
        original.emplace_back(l, so32.basis.matrix(so32.basis.index_of(l)));
    }
    CHECK(extract_structure_constants(LieBasis("c", contracted)) ==
          extract_structure_constants(LieBasis("o", original)));
}

TEST_CASE("translation matrices: exact form, action, and composition") {
    auto q = [](long long n, long long d) { return CScalar(Rational(n, d)); };
    CMatrix t = translation_matrix(q(1, 1), q(2, 1), q(3, 1), q(4, 1));
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            CScalar want;
            if (r == c) want = CScalar(1);
            if (c == 4 && r < 4) want = CScalar(r + 1);
            CHECK(t(r, c) == want);
        }
    CMatrix u    = translation_matrix(q(-1, 2), q(1, 3), q(0, 1), q(5, 7));
    CMatrix back = translation_matrix(-q(-1, 2), -q(1, 3), q(0, 1), -q(5, 7));
    CHECK(u * back == CMatrix::identity(5));
    CHECK(t * u == translation_matrix(q(1, 2), q(7, 3), q(3, 1), q(33, 7)));
}

TEST_CASE("numeric substitution converges to the symbolic limit") {
    GeneratorFamily fam = build_so32_5d();
    ContractionMatrix cm;
    LMatrix expr  = cm.conjugated(fam.basis.matrix(fam.basis.index_of("Bx")), 1);
    CMatrix limit = contract(fam.basis.matrix(fam.basis.index_of("Bx")), 1).limit;
    double dev = 0;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c)
            dev = std::max(dev, std::abs(expr(r, c).substitute(1e6) -
                                         limit(r, c).to_complex()));
    CHECK(dev <= 1e-6);
    CHECK(dev > 0); // the 1/eps^2 tail is present, not silently dropped
}

TEST_CASE("structural invariance checks all pass") {
    for (auto& c : invariance_check()) {
        INFO(c.description);
        CHECK(c.pass);
    }
}
