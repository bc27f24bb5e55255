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
#include "symcheck/realizations.hpp"

#include <json.hpp>

#include <array>
#include <fstream>

namespace symcheck {

namespace {

CMatrix unit(int dim, int r, int c) {
    CMatrix m(dim);
    m(r, c) = CScalar(1);
    return m;
}

const CScalar kI    = CScalar::i();
const CScalar kHalf = CScalar(Rational(1, 2));

CMatrix pauli(int which) {
    CMatrix m(2);
    switch (which) {
        case 0: // identity
            m(0, 0) = CScalar(1);
            m(1, 1) = CScalar(1);
            break;
        case 1:
            m(0, 1) = CScalar(1);
            m(1, 0) = CScalar(1);
            break;
        case 2:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case 3:
            m(0, 0) = CScalar(1);
            m(1, 1) = CScalar(-1);
            break;
    }
    return m;
}

// Block pattern with entries in {-1, 0, +1}, each replaced by the inner
// 2x2 matrix: (pattern x inner) on coordinates (x1, p1, x2, p2).
CMatrix block(const std::array<std::array<int, 2>, 2>& pattern, const CMatrix& inner) {
    CMatrix m(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            if (pattern[a][b] == 0) continue;
            CScalar s = CScalar(pattern[a][b]);
            for (int u = 0; u < 2; ++u)
                for (int v = 0; v < 2; ++v) m(2 * a + u, 2 * b + v) = s * inner(u, v);
        }
    return m;
}

} // namespace

std::vector<CScalar> DiffOpGenerator::apply_to_linear(const std::vector<CScalar>& poly) const {
    if (poly.size() != 2) throw std::invalid_argument("apply_to_linear: expected 2 coefficients");
    // -i * x_a A_{ab} d/dx_b applied to sum_c poly_c x_c picks up, for each
    // coordinate c, the terms -i A_{ac} poly_c x_a.
    std::vector<CScalar> out(2);
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a) out[a] += (-kI) * coeff_(a, c) * poly[c];
    return out;
}

std::vector<std::pair<std::string, DiffOpGenerator>> sp2_diffop_generators() {
    // J2 = -(i/2)(x d/dp - p d/dx)   rotation
    CMatrix j2(2);
    j2(0, 1) = kHalf;
    j2(1, 0) = -kHalf;
    // K1 = -(i/2)(x d/dx - p d/dp)   squeeze along the axes
    CMatrix k1(2);
    k1(0, 0) = kHalf;
    k1(1, 1) = -kHalf;
    // K3 = +(i/2)(x d/dp + p d/dx)   squeeze along the diagonals
    CMatrix k3(2);
    k3(0, 1) = -kHalf;
    k3(1, 0) = -kHalf;
    return {{"J2", DiffOpGenerator(j2)},
            {"K1", DiffOpGenerator(k1)},
            {"K3", DiffOpGenerator(k3)}};
}

GeneratorFamily build_sp2_diffop() {
    std::vector<std::pair<std::string, CMatrix>> gens;
    for (auto& [label, g] : sp2_diffop_generators()) gens.emplace_back(label, g.rep_matrix());
    return {"sp2-diffop", FamilyKind::diffop, LieBasis("sp2-diffop", std::move(gens))};
}

GeneratorFamily build_so21_minkowski() {
    // Coordinates (x, y, z, t); the y row and column of every generator
    // are null, so the family acts on the (x, z, t) subspace only.
    const int x = 0, z = 2, t = 3;
    CMatrix j2 = (unit(4, x, z) - unit(4, z, x)).scaled(kI);
    CMatrix k1 = (unit(4, x, t) + unit(4, t, x)).scaled(kI);
    CMatrix k3 = (unit(4, z, t) + unit(4, t, z)).scaled(kI);
    return {"so21-matrix", FamilyKind::matrix4_minkowski,
            LieBasis("so21-matrix", {{"J2", j2}, {"K1", k1}, {"K3", k3}})};
}

GeneratorFamily build_sp4_phase_space() {
    const std::array<std::array<int, 2>, 2> diag{{{1, 0}, {0, 1}}};
    const std::array<std::array<int, 2>, 2> anti{{{1, 0}, {0, -1}}};
    const std::array<std::array<int, 2>, 2> off{{{0, 1}, {1, 0}}};
    const std::array<std::array<int, 2>, 2> rot{{{0, -1}, {1, 0}}};

    const CScalar ih = kI * kHalf;
    std::vector<std::pair<std::string, CMatrix>> gens;
    gens.emplace_back("L1", block(off, pauli(2)).scaled(-kHalf));
    gens.emplace_back("L2", block(rot, pauli(0)).scaled(ih));
    gens.emplace_back("L3", block(anti, pauli(2)).scaled(-kHalf));
    gens.emplace_back("S3", block(diag, pauli(2)).scaled(kHalf));
    gens.emplace_back("K1", block(anti, pauli(1)).scaled(ih));
    gens.emplace_back("K2", block(diag, pauli(3)).scaled(ih));
    gens.emplace_back("K3", block(off, pauli(1)).scaled(-ih));
    gens.emplace_back("Q1", block(anti, pauli(3)).scaled(-ih));
    gens.emplace_back("Q2", block(diag, pauli(1)).scaled(ih));
    gens.emplace_back("Q3", block(off, pauli(3)).scaled(ih));
    return {"sp4", FamilyKind::sp4_phase_space, LieBasis("sp4", std::move(gens))};
}

GeneratorFamily build_so32_5d() {
    // Metric (+,+,+,-,-) on (x, y, z, t, s).
    const std::array<int, 5> eta{1, 1, 1, -1, -1};
    auto gen = [&](int a, int b) {
        return (unit(5, a, b).scaled(CScalar(eta[b])) - unit(5, b, a).scaled(CScalar(eta[a])))
            .scaled(-kI);
    };
    const int x = 0, y = 1, z = 2, t = 3, s = 4;
    return {"so32-5d", FamilyKind::so32_5d,
            LieBasis("so32-5d", {{"Jx", gen(y, z)},
                                 {"Jy", gen(z, x)},
                                 {"Jz", gen(x, y)},
                                 {"Ax", gen(x, t)},
                                 {"Ay", gen(y, t)},
                                 {"Az", gen(z, t)},
                                 {"Bx", gen(x, s)},
                                 {"By", gen(y, s)},
                                 {"Bz", gen(z, s)},
                                 {"Bt", gen(t, s)}})};
}

CMatrix symplectic_form_exact() {
    CMatrix j(4);
    j(0, 1) = CScalar(1);
    j(1, 0) = CScalar(-1);
    j(2, 3) = CScalar(1);
    j(3, 2) = CScalar(-1);
    return j;
}

void export_family_json(const GeneratorFamily& family, const std::string& path) {
    nlohmann::json out = nlohmann::json::array();
    const LieBasis& b  = family.basis;
    for (int g = 0; g < b.size(); ++g) {
        nlohmann::json entries = nlohmann::json::array();
        const CMatrix& m       = b.matrix(g);
        for (int r = 0; r < m.dim(); ++r)
            for (int c = 0; c < m.dim(); ++c)
                if (!m(r, c).is_zero())
                    entries.push_back({{"row", r},
                                       {"col", c},
                                       {"re", m(r, c).real().to_string()},
                                       {"im", m(r, c).imag().to_string()}});
        out.push_back({{"name", b.label(g)}, {"dim", m.dim()}, {"entries", entries}});
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write family file: " + path);
    f << out.dump(2) << "\n";
}

} // namespace symcheck
