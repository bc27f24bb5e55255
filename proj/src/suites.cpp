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
#include "symcheck/report.hpp"

#include "symcheck/contraction.hpp"
#include "symcheck/fock.hpp"
#include "symcheck/phase_space.hpp"
#include "symcheck/realizations.hpp"
#include "symcheck/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <sstream>

namespace symcheck {

bool SuiteReport::overall_pass() const {
    for (auto& c : checks)
        if (c.status != CheckStatus::pass) return false;
    return true;
}

namespace {

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        default: return "ERROR";
    }
}

std::string now_iso8601() {
    auto t  = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

CheckRecord record(std::string id, std::string desc, bool pass, std::string residual = "") {
    CheckRecord r;
    r.id          = std::move(id);
    r.description = std::move(desc);
    r.status      = pass ? CheckStatus::pass : CheckStatus::fail;
    r.residual    = std::move(residual);
    return r;
}

void append_closure(SuiteReport& report, const std::string& prefix, const LieBasis& basis,
                    const StructureConstants& expected) {
    ClosureReport cr = verify_closure(basis, expected);
    for (auto& pc : cr.pairs) {
        std::string id = prefix + ":[" + basis.label(pc.i) + "," + basis.label(pc.j) + "]";
        report.checks.push_back(record(id,
                                       "commutator [" + basis.label(pc.i) + ", " +
                                           basis.label(pc.j) + "] matches the table exactly",
                                       pc.pass, pc.residual));
    }
}

FockOperator expected_combination(const std::vector<std::pair<std::string, FockOperator>>& gens,
                                  const StructureConstants& table, const std::string& a,
                                  const std::string& b) {
    int ia = table.index_of(a), ib = table.index_of(b);
    FockOperator sum = gens.front().second.scaled(CScalar()); // zero operator
    for (auto& [label, op] : gens) {
        CScalar c = table.coeff(ia, ib, table.index_of(label));
        if (!c.is_zero()) sum = sum + op.scaled(c);
    }
    return sum;
}

void append_fock_closure(SuiteReport& report, const std::string& prefix,
                         const std::vector<std::pair<std::string, FockOperator>>& gens,
                         const StructureConstants& table, int margin) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            auto& [la, a] = gens[i];
            auto& [lb, b] = gens[j];
            auto expected = expected_combination(gens, table, la, lb);
            auto sc       = safe_commutator_check(a, b, expected, margin);
            report.checks.push_back(
                record(prefix + ":[" + la + "," + lb + "]",
                       "safe-subspace commutator [" + la + ", " + lb + "] matches the table",
                       sc.pass, sc.residual));
        }
}

std::vector<std::pair<std::string, FockOperator>>
fock_subset(const std::vector<std::pair<std::string, FockOperator>>& gens,
            const std::vector<std::string>& labels) {
    std::vector<std::pair<std::string, FockOperator>> out;
    for (auto& want : labels)
        for (auto& [l, op] : gens)
            if (l == want) out.emplace_back(l, op);
    return out;
}

// ---------------------------------------------------------------- suites

SuiteReport suite_sp2_diffop(const SuiteOptions&) {
    SuiteReport report;
    GeneratorFamily fam = build_sp2_diffop();
    append_closure(report, "sp2-diffop", fam.basis, tables::bundled("sp2_so21"));

    // Vector-field reduction lemma against the degree-1 action.
    auto gens = sp2_diffop_generators();
    DiffOpGenerator lemma = DiffOpGenerator::commutator(gens[0].second, gens[1].second);
    CMatrix direct = commutator(gens[0].second.rep_matrix(), gens[1].second.rep_matrix());
    report.checks.push_back(record("sp2-diffop:lemma",
                                   "vector-field commutator reduces to -i[A, B]",
                                   lemma.rep_matrix() == direct));
    return report;
}

SuiteReport suite_so21_matrix(const SuiteOptions&) {
    SuiteReport report;
    GeneratorFamily fam = build_so21_minkowski();
    append_closure(report, "so21", fam.basis, tables::bundled("sp2_so21"));
    for (int g = 0; g < fam.basis.size(); ++g) {
        const CMatrix& m = fam.basis.matrix(g);
        bool null_y = true;
        for (int i = 0; i < 4; ++i)
            if (!m(1, i).is_zero() || !m(i, 1).is_zero()) null_y = false;
        report.checks.push_back(record("so21:null-y:" + fam.basis.label(g),
                                       fam.basis.label(g) +
                                           " has null second row and second column",
                                       null_y));
    }
    return report;
}

SuiteReport suite_su2(const SuiteOptions& opt) {
    SuiteReport report;
    FockBasis basis(opt.cutoff);
    auto gens   = build_ten_generators(basis);
    auto triple = fock_subset(gens, {"L1", "L2", "L3"});
    append_fock_closure(report, "su2", triple, tables::bundled("su2"), 2);

    FockOperator casimir = triple[0].second * triple[0].second +
                           triple[1].second * triple[1].second +
                           triple[2].second * triple[2].second;
    for (auto& [l, op] : triple) {
        auto sc = safe_commutator_check(casimir, op, op.scaled(CScalar()), 2);
        report.checks.push_back(record("su2:casimir:" + l,
                                       "L1^2+L2^2+L3^2 commutes with " + l +
                                           " on the safe subspace",
                                       sc.pass, sc.residual));
    }
    return report;
}

SuiteReport suite_yurke_triple(const SuiteOptions& opt) {
    SuiteReport report;
    FockBasis basis(opt.cutoff);
    auto triple = fock_subset(build_ten_generators(basis), {"K3", "Q3", "S3"});
    append_fock_closure(report, "yurke", triple, tables::bundled("yurke_triple"), 2);
    return report;
}

SuiteReport suite_so32_fock(const SuiteOptions& opt) {
    SuiteReport report;
    FockBasis basis(opt.cutoff);
    auto gens = build_ten_generators(basis);
    append_fock_closure(report, "so32-fock", gens, tables::bundled("so32"), 2);
    for (auto& [l, op] : gens)
        report.checks.push_back(record("so32-fock:hermitian:" + l,
                                       l + " is Hermitian on the full truncated space",
                                       op.dagger().matrix() == op.matrix()));
    return report;
}

SuiteReport suite_sp4(const SuiteOptions& opt) {
    SuiteReport report;
    GeneratorFamily fam = build_sp4_phase_space();
    append_closure(report, "sp4", fam.basis, tables::bundled("so32"));

    // The six generators that do not mix the two oscillators.
    std::vector<std::string> diagonal;
    for (int g = 0; g < fam.basis.size(); ++g) {
        const CMatrix& m = fam.basis.matrix(g);
        bool diag = true;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if ((r / 2) != (c / 2) && !m(r, c).is_zero()) diag = false;
        if (diag) diagonal.push_back(fam.basis.label(g));
    }
    std::vector<std::string> expected_diag{"L3", "S3", "K1", "K2", "Q1", "Q2"};
    std::sort(diagonal.begin(), diagonal.end());
    std::sort(expected_diag.begin(), expected_diag.end());
    report.checks.push_back(record("sp4:block-diagonal",
                                   "the six block-diagonal generators are "
                                   "{S3, L3, K1, K2, Q1, Q2}",
                                   diagonal == expected_diag));

    CMatrix j = symplectic_form_exact();
    for (int g = 0; g < fam.basis.size(); ++g) {
        CMatrix real_gen = fam.basis.matrix(g).scaled(-CScalar::i());
        bool real_ok = true;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (!real_gen(r, c).imag().is_zero()) real_ok = false;
        CMatrix cond = real_gen.transpose() * j + j * real_gen;
        report.checks.push_back(record("sp4:infinitesimal:" + fam.basis.label(g),
                                       "(-i " + fam.basis.label(g) +
                                           ") is real and satisfies the symplectic condition "
                                           "exactly",
                                       real_ok && cond.is_zero()));
    }

    for (int g = 0; g < fam.basis.size(); ++g)
        for (double t : {-1.0, -0.1, 0.1, 1.0}) {
            RMatrix m    = group_element(fam.basis.matrix(g), t);
            bool canon   = is_canonical(m, opt.tol);
            bool det_one = std::abs(m.det() - 1.0) <= opt.tol;
            std::ostringstream id;
            id << "sp4:finite:" << fam.basis.label(g) << ":t=" << t;
            report.checks.push_back(record(id.str(),
                                           "exp(-i t G) is canonical with unit determinant",
                                           canon && det_one));
        }
    return report;
}

SuiteReport suite_so32_5d(const SuiteOptions&) {
    SuiteReport report;
    GeneratorFamily fam = build_so32_5d();
    const LieBasis& b   = fam.basis;
    const CScalar i     = CScalar::i();

    auto entry_check = [&](const std::string& label, int r, int c, const CScalar& want) {
        const CMatrix& m = b.matrix(b.index_of(label));
        bool ok = (m(r, c) == want);
        // all other entries zero except the transpose partner
        for (int rr = 0; rr < 5; ++rr)
            for (int cc = 0; cc < 5; ++cc) {
                if ((rr == r && cc == c) || (rr == c && cc == r)) continue;
                if (!m(rr, cc).is_zero()) ok = false;
            }
        return ok;
    };
    report.checks.push_back(record("so32-5d:Ax",
                                   "Ax has entries i at (x,t) and (t,x) only",
                                   entry_check("Ax", 0, 3, i) &&
                                       b.matrix(b.index_of("Ax"))(3, 0) == i));
    report.checks.push_back(record("so32-5d:Bx",
                                   "Bx has entries i at (x,s) and (s,x) only",
                                   entry_check("Bx", 0, 4, i) &&
                                       b.matrix(b.index_of("Bx"))(4, 0) == i));
    report.checks.push_back(record("so32-5d:Bt",
                                   "Bt has entries i at (t,s) and -i at (s,t) only",
                                   entry_check("Bt", 3, 4, i) &&
                                       b.matrix(b.index_of("Bt"))(4, 3) == -i));

    try {
        StructureConstants sc = extract_structure_constants(b);
        report.checks.push_back(record("so32-5d:closure",
                                       "the ten 5x5 generators close exactly", true));
        report.checks.push_back(record("so32-5d:jacobi",
                                       "extracted tensor satisfies the Jacobi identity",
                                       sc.jacobi_ok()));
    } catch (const NotClosedError& e) {
        report.checks.push_back(record("so32-5d:closure",
                                       "the ten 5x5 generators close exactly", false,
                                       e.what()));
    }
    return report;
}

SuiteReport suite_isomorphism(const SuiteOptions&) {
    SuiteReport report;

    StructureConstants sp2   = tables::bundled("sp2_so21");
    StructureConstants yurke = tables::bundled("yurke_triple");
    auto map = find_basis_map(sp2, yurke);
    bool expected_map = map && map->perm == std::vector<int>{2, 1, 0} &&
                        map->signs == std::vector<int>{1, 1, 1};
    CheckRecord r1 = record("iso:sp2-yurke",
                            "signed-permutation map between the (J2,K1,K3) and "
                            "(K3,Q3,S3) triples: J2->S3, K1->Q3, K3->K3 (correspondence "
                            "derived here, not printed in the source relations)",
                            expected_map);
    if (map) r1.data = {{"map", map->to_string(sp2.labels(), yurke.labels())},
                        {"derived", true}};
    report.checks.push_back(std::move(r1));

    StructureConstants sp4 = extract_structure_constants(build_sp4_phase_space().basis);
    StructureConstants so5 = extract_structure_constants(build_so32_5d().basis);
    auto map2 = find_basis_map(sp4, so5);
    bool ok2  = map2 && basis_map_valid(sp4, so5, *map2);
    CheckRecord r2 = record("iso:sp4-so32-5d",
                            "signed-permutation isomorphism between the Sp(4) and the "
                            "5x5 SO(3,2) structure constants",
                            ok2);
    if (map2) r2.data = {{"map", map2->to_string(sp4.labels(), so5.labels())}};
    report.checks.push_back(std::move(r2));

    auto none = find_basis_map(tables::bundled("su2"), sp2);
    report.checks.push_back(record("iso:su2-sp2",
                                   "no signed-permutation isomorphism between su(2) and "
                                   "the (J2,K1,K3) algebra (compact vs non-compact)",
                                   !none.has_value()));
    return report;
}

SuiteReport suite_contraction(const SuiteOptions&) {
    SuiteReport report;
    GeneratorFamily fam = build_so32_5d();
    const CScalar i     = CScalar::i();

    auto single_entry = [&](int r, int c) {
        CMatrix m(5);
        m(r, c) = i;
        return m;
    };
    std::map<std::string, CMatrix> expected_limits{
        {"Bx", single_entry(0, 4)},
        {"By", single_entry(1, 4)},
        {"Bz", single_entry(2, 4)},
        {"Bt", single_entry(3, 4)},
    };
    std::map<std::string, int> expected_k{{"Jx", 0}, {"Jy", 0}, {"Jz", 0}, {"Ax", 0},
                                          {"Ay", 0}, {"Az", 0}, {"Bx", 1}, {"By", 1},
                                          {"Bz", 1}, {"Bt", 1}};

    for (int g = 0; g < fam.basis.size(); ++g) {
        const std::string& label = fam.basis.label(g);
        try {
            ContractedGenerator cg = auto_contract(fam.basis.matrix(g), label);
            bool ok = (cg.scaling_exponent == expected_k[label]);
            auto it = expected_limits.find(label);
            if (it != expected_limits.end()) ok = ok && (cg.limit == it->second);
            if (expected_k[label] == 0) ok = ok && (cg.limit == fam.basis.matrix(g));
            CheckRecord r = record("contraction:" + label,
                                   label + " contracts with the expected scaling exponent "
                                           "and exact limit",
                                   ok);
            nlohmann::json limit = nlohmann::json::array();
            for (int rr = 0; rr < 5; ++rr)
                for (int cc = 0; cc < 5; ++cc)
                    if (!cg.limit(rr, cc).is_zero())
                        limit.push_back({{"row", rr},
                                         {"col", cc},
                                         {"value", cg.limit(rr, cc).to_string()}});
            r.data = {{"label", label},
                      {"k", cg.scaling_exponent},
                      {"converged", true},
                      {"limit", limit},
                      {"residual_degrees", nlohmann::json::array()}};
            report.checks.push_back(std::move(r));
        } catch (const DivergentContractionError& e) {
            report.checks.push_back(record("contraction:" + label,
                                           label + " contraction diverged unexpectedly",
                                           false, e.what()));
        }
    }

    bool divergence_detected = false;
    std::string divergence_detail;
    try {
        contract(fam.basis.matrix(fam.basis.index_of("Bx")), 0, "Bx");
    } catch (const DivergentContractionError& e) {
        divergence_detected = !e.offending.empty() && e.offending.front().degree == 1;
        divergence_detail   = e.what();
    }
    report.checks.push_back(record("contraction:Bx:k=0-divergence",
                                   "contracting Bx without the 1/eps prefactor is "
                                   "reported as divergent (degree +1 entry)",
                                   divergence_detected, divergence_detail));

    // Numeric-symbolic consistency at a large concrete eps.
    ContractionMatrix cm;
    double max_dev = 0;
    for (auto& [label, limit] : expected_limits) {
        LMatrix expr = cm.conjugated(fam.basis.matrix(fam.basis.index_of(label)), 1);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c) {
                auto numeric = expr(r, c).substitute(1e6);
                auto exact   = limit(r, c).to_complex();
                max_dev      = std::max(max_dev, std::abs(numeric - exact));
            }
    }
    std::ostringstream dev;
    dev << max_dev;
    report.checks.push_back(record("contraction:numeric-consistency",
                                   "eps=1e6 substitution agrees with the symbolic limit "
                                   "within 1e-6",
                                   max_dev <= 1e-6, dev.str()));
    return report;
}

SuiteReport suite_poincare(const SuiteOptions&) {
    SuiteReport report;
    LieBasis poincare = build_poincare_basis();

    try {
        StructureConstants sc = extract_structure_constants(poincare);
        report.checks.push_back(record("poincare:closure",
                                       "the contracted ten-generator basis closes exactly",
                                       true));

        // The Lorentz block must be untouched by the contraction.
        GeneratorFamily so32 = build_so32_5d();
        std::vector<std::pair<std::string, CMatrix>> lorentz_c, lorentz_u;
        for (auto& l : {"Jx", "Jy", "Jz", "Ax", "Ay", "Az"}) {
            lorentz_c.emplace_back(l, poincare.matrix(poincare.index_of(l)));
            lorentz_u.emplace_back(l, so32.basis.matrix(so32.basis.index_of(l)));
        }
        StructureConstants sc_c =
            extract_structure_constants(LieBasis("lorentz-contracted", lorentz_c));
        StructureConstants sc_u =
            extract_structure_constants(LieBasis("lorentz-uncontracted", lorentz_u));
        report.checks.push_back(record("poincare:lorentz-subalgebra",
                                       "structure constants of {J, A} agree with the "
                                       "uncontracted Lorentz subalgebra",
                                       sc_c == sc_u));
    } catch (const NotClosedError& e) {
        report.checks.push_back(record("poincare:closure",
                                       "the contracted ten-generator basis closes exactly",
                                       false, e.what()));
    }

    const char* trans[4] = {"Bcx", "Bcy", "Bcz", "Bct"};
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            CMatrix c = commutator(poincare.matrix(poincare.index_of(trans[a])),
                                   poincare.matrix(poincare.index_of(trans[b])));
            report.checks.push_back(record(std::string("poincare:[") + trans[a] + "," +
                                               trans[b] + "]",
                                           "translations commute exactly", c.is_zero()));
        }

    auto q = [](long long n, long long d) { return CScalar(Rational(n, d)); };
    CMatrix t1 = translation_matrix(q(1, 1), q(2, 1), q(3, 1), q(4, 1));
    bool form_ok = true;
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) {
            CScalar want;
            if (r == c) want = CScalar(1);
            if (c == 4 && r < 4) want = CScalar(r + 1);
            if (t1(r, c) != want) form_ok = false;
        }
    report.checks.push_back(record("poincare:translation-form",
                                   "translation(1,2,3,4) is the identity with last column "
                                   "(1,2,3,4,1)",
                                   form_ok));

    // (x, y, z, t, 1) -> (x+a, y+b, z+c, t+d, 1) on a sample point
    std::vector<CScalar> point{q(7, 1), q(-2, 1), q(1, 3), q(5, 1), q(1, 1)};
    bool action_ok = true;
    for (int r = 0; r < 5; ++r) {
        CScalar got;
        for (int c = 0; c < 5; ++c) got += t1(r, c) * point[c];
        CScalar want = (r < 4) ? point[r] + CScalar(r + 1) : q(1, 1);
        if (got != want) action_ok = false;
    }
    report.checks.push_back(record("poincare:translation-action",
                                   "translation adds (a,b,c,d) to (x,y,z,t) and fixes the "
                                   "fifth component",
                                   action_ok));

    CMatrix t2   = translation_matrix(q(1, 2), q(-3, 1), q(0, 1), q(7, 5));
    CMatrix tsum = translation_matrix(q(3, 2), q(-1, 1), q(3, 1), q(27, 5));
    report.checks.push_back(record("poincare:translation-composition",
                                   "translation composition is exactly additive",
                                   t1 * t2 == tsum));

    for (auto& ic : invariance_check())
        report.checks.push_back(record("poincare:invariance", ic.description, ic.pass));
    return report;
}

SuiteReport suite_phase_space(const SuiteOptions& opt) {
    SuiteReport report;
    GaussianState seed = GaussianState::seed();
    double area        = uncertainty_area(seed);
    std::ostringstream os;
    os << area - M_PI;
    report.checks.push_back(record("phase-space:seed-area",
                                   "uncertainty area of the seed Gaussian equals pi",
                                   std::abs(area - M_PI) <= opt.tol, os.str()));

    for (double angle : {0.3, 1.2}) {
        RMatrix rot = group_element(rotation_generator(), angle);
        RMatrix sq  = group_element(squeeze_generator(), angle);
        GaussianState rotated  = transform_gaussian(seed, rot, opt.tol);
        GaussianState squeezed = transform_gaussian(seed, sq, opt.tol);
        std::ostringstream id;
        id << "phase-space:invariance:" << angle;
        bool ok = std::abs(uncertainty_area(rotated) - M_PI) <= opt.tol &&
                  std::abs(uncertainty_area(squeezed) - M_PI) <= opt.tol;
        report.checks.push_back(record(id.str(),
                                       "area invariant under rotation and squeeze",
                                       ok));
        // the rotation also leaves the seed covariance itself unchanged
        bool cov_fixed = (rotated.covariance - seed.covariance).max_abs() <= opt.tol;
        report.checks.push_back(record(id.str() + ":rotation-fixes-seed",
                                       "rotation leaves the seed covariance unchanged",
                                       cov_fixed));
    }

    GaussianState wide{RMatrix::diagonal({4.0, 4.0})};
    report.checks.push_back(record("phase-space:scaled-area",
                                   "covariance diag(4,4) has area 4*pi",
                                   std::abs(uncertainty_area(wide) - 4 * M_PI) <= opt.tol));

    RMatrix m1 = group_element(rotation_generator(), 0.7);
    RMatrix m2 = group_element(squeeze_generator(), 0.4);
    GaussianState two_step = transform_gaussian(transform_gaussian(seed, m1), m2);
    GaussianState one_step = transform_gaussian(seed, m2 * m1);
    report.checks.push_back(record("phase-space:composition",
                                   "transforming by M1 then M2 equals M2*M1",
                                   (two_step.covariance - one_step.covariance).max_abs() <=
                                       opt.tol));
    return report;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"sp2-diffop", suite_sp2_diffop},   {"so21-matrix", suite_so21_matrix},
        {"su2", suite_su2},                 {"yurke-triple", suite_yurke_triple},
        {"so32-fock", suite_so32_fock},     {"sp4", suite_sp4},
        {"so32-5d", suite_so32_5d},         {"isomorphism", suite_isomorphism},
        {"contraction", suite_contraction}, {"poincare", suite_poincare},
        {"phase-space", suite_phase_space},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (auto& [name, fn] : registry()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    SuiteReport report;
    report.suite     = name;
    report.timestamp = now_iso8601();

    auto run_one = [&](const std::pair<std::string, SuiteFn>& entry) {
        try {
            SuiteReport sub = entry.second(options);
            for (auto& c : sub.checks) report.checks.push_back(std::move(c));
        } catch (const std::exception& e) {
            CheckRecord r;
            r.id          = entry.first + ":error";
            r.description = "suite aborted";
            r.status      = CheckStatus::error;
            r.residual    = e.what();
            report.checks.push_back(std::move(r));
        }
    };

    if (name == "all") {
        for (auto& entry : registry()) run_one(entry);
        return report;
    }
    for (auto& entry : registry())
        if (entry.first == name) {
            run_one(entry);
            return report;
        }
    throw std::invalid_argument("unknown suite: " + name);
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (auto& c : checks) {
        nlohmann::json j{{"id", c.id},
                         {"description", c.description},
                         {"status", status_name(c.status)}};
        if (!c.residual.empty()) j["residual"] = c.residual;
        if (!c.data.is_null()) j["data"] = c.data;
        checks_json.push_back(std::move(j));
    }
    return {{"suite", suite},
            {"timestamp", timestamp},
            {"overall", overall_pass() ? "PASS" : "FAIL"},
            {"checks", checks_json}};
}

std::string SuiteReport::to_text() const {
    std::ostringstream os;
    for (auto& c : checks) {
        os << status_name(c.status) << "  " << c.id << "  " << c.description;
        if (!c.residual.empty() && c.status != CheckStatus::pass)
            os << "  [" << c.residual << "]";
        os << "\n";
    }
    os << (overall_pass() ? "OVERALL PASS" : "OVERALL FAIL") << "  (" << checks.size()
       << " checks)\n";
    return os.str();
}

} // namespace symcheck
