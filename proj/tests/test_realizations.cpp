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

#include "symcheck/realizations.hpp"
#include "symcheck/tables.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace symcheck;

TEST_CASE("diffop action matches its representation matrix") {
    for (auto& [label, gen] : sp2_diffop_generators()) {
        CMatrix rep = gen.rep_matrix();
        // apply to x and to p; the result's coefficient vector must be the
        // corresponding column of the representation matrix
        for (int basis_vec = 0; basis_vec < 2; ++basis_vec) {
            std::vector<CScalar> poly(2);
            poly[basis_vec] = CScalar(1);
            auto image = gen.apply_to_linear(poly);
            for (int r = 0; r < 2; ++r) CHECK(image[r] == rep(r, basis_vec));
        }
    }
}

TEST_CASE("vector-field commutator lemma") {
    auto gens = sp2_diffop_generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            DiffOpGenerator lemma = DiffOpGenerator::commutator(gens[i].second, gens[j].second);
            CHECK(lemma.rep_matrix() ==
                  commutator(gens[i].second.rep_matrix(), gens[j].second.rep_matrix()));
        }
}

TEST_CASE("diffop triple closes on the three-generator table") {
    ClosureReport r = verify_closure(build_sp2_diffop().basis, tables::bundled("sp2_so21"));
    CHECK(r.pass);
    CHECK(r.pairs.size() == 3);
}

TEST_CASE("4x4 family closes and never touches the y axis") {
    GeneratorFamily fam = build_so21_minkowski();
    CHECK(verify_closure(fam.basis, tables::bundled("sp2_so21")).pass);
    for (int g = 0; g < fam.basis.size(); ++g)
        for (int i = 0; i < 4; ++i) {
            CHECK(fam.basis.matrix(g)(1, i).is_zero());
            CHECK(fam.basis.matrix(g)(i, 1).is_zero());
        }
}

TEST_CASE("ten 4x4 generators close on the ten-generator table") {
    CHECK(verify_closure(build_sp4_phase_space().basis, tables::bundled("so32")).pass);
}

TEST_CASE("sp4 generators are infinitesimally symplectic, exactly") {
    GeneratorFamily fam = build_sp4_phase_space();
    CMatrix j = symplectic_form_exact();
    CHECK((j * j) == -CMatrix::identity(4));
    for (int g = 0; g < fam.basis.size(); ++g) {
        CMatrix m = fam.basis.matrix(g).scaled(-CScalar::i());
        CHECK((m.transpose() * j + j * m).is_zero());
        // -iG is real
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) CHECK(m(r, c).imag().is_zero());
    }
}

TEST_CASE("5x5 family closes and matches its stated entries") {
    GeneratorFamily fam = build_so32_5d();
    const LieBasis& b = fam.basis;
    CHECK_NOTHROW((void)extract_structure_constants(b));

    CScalar i = CScalar::i();
    CHECK(b.matrix(b.index_of("Ax"))(0, 3) == i);
    CHECK(b.matrix(b.index_of("Ax"))(3, 0) == i);
    CHECK(b.matrix(b.index_of("Bx"))(0, 4) == i);
    CHECK(b.matrix(b.index_of("Bx"))(4, 0) == i);
    CHECK(b.matrix(b.index_of("Bt"))(3, 4) == i);
    CHECK(b.matrix(b.index_of("Bt"))(4, 3) == -i);
    CHECK(b.matrix(b.index_of("Jz"))(0, 1) == -i);
    CHECK(b.matrix(b.index_of("Jz"))(1, 0) == i);
}

TEST_CASE("5x5 and 4x4 structure constants agree up to signed relabeling") {
    StructureConstants sp4 = extract_structure_constants(build_sp4_phase_space().basis);
    StructureConstants so5 = extract_structure_constants(build_so32_5d().basis);
    auto map = find_basis_map(sp4, so5);
    REQUIRE(map.has_value());
    CHECK(basis_map_valid(sp4, so5, *map));
}

TEST_CASE("family JSON export is parseable and complete") {
    std::string path = "export_so32_5d.json";
    export_family_json(build_so32_5d(), path);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    REQUIRE(j.is_array());
    CHECK(j.size() == 10);
    CHECK(j[0].contains("name"));
    CHECK(j[0]["dim"] == 5);
    for (auto& rec : j)
        for (auto& e : rec["entries"]) {
            CHECK(e.contains("row"));
            CHECK(e.contains("re"));
            CHECK(e.contains("im"));
        }
    std::remove(path.c_str());
}
