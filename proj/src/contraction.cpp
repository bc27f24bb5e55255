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
#include "symcheck/contraction.hpp"

#include "symcheck/realizations.hpp"

#include <sstream>

namespace symcheck {

ContractionMatrix::ContractionMatrix() : c_(5), c_inv_(5) {
    for (int i = 0; i < 4; ++i) {
        c_(i, i)     = Laurent(CScalar(1));
        c_inv_(i, i) = Laurent(CScalar(1));
    }
    c_(4, 4)     = Laurent::eps(1);
    c_inv_(4, 4) = Laurent::eps(-1);
}

LMatrix ContractionMatrix::conjugated(const CMatrix& g, int k) const {
    if (g.dim() != 5) throw std::invalid_argument("contract: generator must be 5x5");
    LMatrix expr = c_inv_ * to_laurent(g) * c_;
    LMatrix out(5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) out(r, c) = expr(r, c).shifted(-k);
    return out;
}

ContractedGenerator contract(const CMatrix& g, int k, const std::string& label) {
    static const ContractionMatrix cm;
    LMatrix expr = cm.conjugated(g, k);

    std::vector<DivergentContractionError::Term> bad;
    CMatrix limit(5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            const Laurent& entry = expr(r, c);
            for (auto& [deg, coeff] : entry.coefficients())
                if (deg > 0) bad.push_back({r, c, deg, coeff.to_string()});
            limit(r, c) = entry.coefficient(0);
        }
    if (!bad.empty()) {
        std::ostringstream os;
        os << "divergent contraction";
        if (!label.empty()) os << " of " << label;
        os << " at k=" << k << ":";
        for (auto& t : bad)
            os << " entry(" << t.row << "," << t.col << ") has degree " << t.degree
               << " coefficient " << t.coefficient << ";";
        throw DivergentContractionError(os.str(), std::move(bad));
    }
    return {label, k, std::move(limit)};
}

ContractedGenerator auto_contract(const CMatrix& g, const std::string& label) {
    for (int k = 0;; ++k) {
        try {
            return contract(g, k, label);
        } catch (const DivergentContractionError&) {
            // A 5x5 conjugation by diag(1,..,eps) has degree at most 1.
            if (k >= 2) throw;
        }
    }
}

LieBasis build_poincare_basis() {
    GeneratorFamily so32 = build_so32_5d();
    std::vector<std::pair<std::string, CMatrix>> gens;
    std::vector<int> ks = poincare_scaling_exponents();
    static const char* names[10] = {"Jx", "Jy", "Jz", "Ax", "Ay", "Az",
                                    "Bcx", "Bcy", "Bcz", "Bct"};
    static const char* sources[10] = {"Jx", "Jy", "Jz", "Ax", "Ay", "Az",
                                      "Bx", "By", "Bz", "Bt"};
    for (int i = 0; i < 10; ++i) {
        const CMatrix& g = so32.basis.matrix(so32.basis.index_of(sources[i]));
        gens.emplace_back(names[i], contract(g, ks[i], names[i]).limit);
    }
    return LieBasis("poincare", std::move(gens));
}

std::vector<int> poincare_scaling_exponents() { return {0, 0, 0, 0, 0, 0, 1, 1, 1, 1}; }

CMatrix translation_matrix(const CScalar& a, const CScalar& b, const CScalar& c,
                           const CScalar& d) {
    static const LieBasis poincare = build_poincare_basis();
    CMatrix sum = poincare.matrix(poincare.index_of("Bcx")).scaled(a) +
                  poincare.matrix(poincare.index_of("Bcy")).scaled(b) +
                  poincare.matrix(poincare.index_of("Bcz")).scaled(c) +
                  poincare.matrix(poincare.index_of("Bct")).scaled(d);
    return exp_nilpotent(sum.scaled(-CScalar::i()));
}

std::vector<InvarianceCheck> invariance_check() {
    std::vector<InvarianceCheck> checks;

    CMatrix t = translation_matrix(CScalar(1), CScalar(2), CScalar(3), CScalar(4));
    bool block_ok = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            CScalar want = (r == c) ? CScalar(1) : CScalar();
            if (t(r, c) != want) block_ok = false;
        }
    checks.push_back({"translation(1,2,3,4) fixes the upper-left 4x4 block", block_ok});

    LieBasis poincare = build_poincare_basis();
    bool rotations_ok = true;
    for (auto& name : {"Jx", "Jy", "Jz", "Ax", "Ay", "Az"}) {
        const CMatrix& g = poincare.matrix(poincare.index_of(name));
        for (int i = 0; i < 5; ++i)
            if (!g(4, i).is_zero() || !g(i, 4).is_zero()) rotations_ok = false;
    }
    checks.push_back({"uncontracted {J, A} generators have zero s-row and s-column",
                      rotations_ok});

    bool translations_ok = true;
    for (auto& name : {"Bcx", "Bcy", "Bcz", "Bct"}) {
        const CMatrix& g = poincare.matrix(poincare.index_of(name));
        for (int i = 0; i < 5; ++i)
            if (!g(4, i).is_zero()) translations_ok = false;
        bool any_col = false;
        for (int i = 0; i < 4; ++i) any_col |= !g(i, 4).is_zero();
        translations_ok &= any_col;
    }
    checks.push_back({"contracted generators act through the s-column only, last row null",
                      translations_ok});
    return checks;
}

} // namespace symcheck
