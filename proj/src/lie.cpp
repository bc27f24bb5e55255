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
#include "symcheck/lie.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symcheck {

LieBasis::LieBasis(std::string name, std::vector<std::pair<std::string, CMatrix>> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
    if (generators_.empty()) throw std::invalid_argument("LieBasis: empty generator list");
    std::set<std::string> seen;
    const int dim = generators_.front().second.dim();
    for (auto& [label, m] : generators_) {
        if (!seen.insert(label).second)
            throw std::invalid_argument("LieBasis: duplicate label " + label);
        if (m.dim() != dim) throw std::invalid_argument("LieBasis: mixed matrix dimensions");
    }
}

int LieBasis::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (generators_[i].first == label) return i;
    throw std::out_of_range("LieBasis: unknown label " + label);
}

std::vector<std::string> LieBasis::labels() const {
    std::vector<std::string> out;
    out.reserve(generators_.size());
    for (auto& [l, m] : generators_) out.push_back(l);
    return out;
}

int StructureConstants::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    throw std::out_of_range("StructureConstants: unknown label " + label);
}

void StructureConstants::set(int i, int j, int k, const CScalar& c) {
    if (i == j) {
        if (!c.is_zero())
            throw std::invalid_argument("StructureConstants: nonzero [G,G] coefficient");
        return;
    }
    std::array<int, 3> key{std::min(i, j), std::max(i, j), k};
    CScalar value = (i < j) ? c : -c;
    if (value.is_zero())
        tensor_.erase(key);
    else
        tensor_[key] = value;
}

CScalar StructureConstants::coeff(int i, int j, int k) const {
    if (i == j) return CScalar();
    auto it = tensor_.find({std::min(i, j), std::max(i, j), k});
    if (it == tensor_.end()) return CScalar();
    return (i < j) ? it->second : -it->second;
}

std::vector<std::tuple<int, int, int, CScalar>> StructureConstants::entries() const {
    std::vector<std::tuple<int, int, int, CScalar>> out;
    out.reserve(tensor_.size());
    for (auto& [key, c] : tensor_) out.emplace_back(key[0], key[1], key[2], c);
    return out;
}

std::vector<CScalar> StructureConstants::bracket_coeffs(int i, int j) const {
    std::vector<CScalar> out(size());
    for (int k = 0; k < size(); ++k) out[k] = coeff(i, j, k);
    return out;
}

bool StructureConstants::jacobi_ok() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int m = 0; m < n; ++m) {
                    // sum over the intermediate index of the three cyclic terms
                    CScalar total;
                    for (int k = 0; k < n; ++k) {
                        total += coeff(b, c, k) * coeff(a, k, m);
                        total += coeff(c, a, k) * coeff(b, k, m);
                        total += coeff(a, b, k) * coeff(c, k, m);
                    }
                    if (!total.is_zero()) return false;
                }
    return true;
}

std::optional<std::vector<CScalar>> solve_in_span(const std::vector<CMatrix>& vectors,
                                                  const CMatrix& target) {
    const int n    = int(vectors.size());
    const int dim  = target.dim();
    const int rows = dim * dim;

    // Augmented system [V | target], columns are the vectorized matrices.
    std::vector<std::vector<CScalar>> a(rows, std::vector<CScalar>(n + 1));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < n; ++c) a[r][c] = vectors[c](r / dim, r % dim);
        a[r][n] = target(r / dim, r % dim);
    }

    int row = 0;
    std::vector<int> pivot_col(rows, -1);
    for (int col = 0; col < n && row < rows; ++col) {
        int pr = -1;
        for (int r = row; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        CScalar inv = a[row][col].inverse();
        for (int c = col; c <= n; ++c) a[row][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            CScalar f = a[r][col];
            for (int c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!a[r][n].is_zero()) return std::nullopt;

    std::vector<CScalar> x(n);
    for (int r = 0; r < row; ++r) x[pivot_col[r]] = a[r][n];
    return x;
}

StructureConstants extract_structure_constants(const LieBasis& basis) {
    const int n = basis.size();
    std::vector<CMatrix> vectors;
    vectors.reserve(n);
    for (int i = 0; i < n; ++i) vectors.push_back(basis.matrix(i));

    StructureConstants sc(basis.labels());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CMatrix bracket = commutator(basis.matrix(i), basis.matrix(j));
            auto coeffs     = solve_in_span(vectors, bracket);
            if (!coeffs) {
                std::ostringstream os;
                os << "basis '" << basis.name() << "' not closed: [" << basis.label(i) << ", "
                   << basis.label(j) << "] lies outside the span of the basis";
                throw NotClosedError(basis.label(i), basis.label(j), bracket, os.str());
            }
            for (int k = 0; k < n; ++k) sc.set(i, j, k, (*coeffs)[k]);
        }
    return sc;
}

namespace {

std::string residual_string(const CMatrix& r) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j)
            if (!r(i, j).is_zero()) {
                if (!first) os << ", ";
                os << "(" << i << "," << j << ")=" << r(i, j).to_string();
                first = false;
            }
    return os.str();
}

} // namespace

ClosureReport verify_closure(const LieBasis& basis, const StructureConstants& expected) {
    ClosureReport report;
    report.pass = true;

    // The expected tensor addresses generators by label, so the basis order
    // may differ from the table order.
    std::vector<int> to_table(basis.size());
    for (int i = 0; i < basis.size(); ++i) to_table[i] = expected.index_of(basis.label(i));

    for (int i = 0; i < basis.size(); ++i)
        for (int j = i + 1; j < basis.size(); ++j) {
            CMatrix lhs = commutator(basis.matrix(i), basis.matrix(j));
            for (int k = 0; k < basis.size(); ++k) {
                CScalar c = expected.coeff(to_table[i], to_table[j], to_table[k]);
                if (!c.is_zero()) lhs -= basis.matrix(k).scaled(c);
            }
            PairCheck pc;
            pc.i    = i;
            pc.j    = j;
            pc.pass = lhs.is_zero();
            if (!pc.pass) {
                pc.residual = residual_string(lhs);
                report.pass = false;
            }
            report.pairs.push_back(std::move(pc));
        }
    return report;
}

std::string BasisMap::to_string(const std::vector<std::string>& src_labels,
                                const std::vector<std::string>& dst_labels) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) os << ", ";
        os << src_labels[i] << " -> " << (signs[i] < 0 ? "-" : "+") << dst_labels[perm[i]];
    }
    return os.str();
}

bool basis_map_valid(const StructureConstants& src, const StructureConstants& dst,
                     const BasisMap& map) {
    const int n = src.size();
    if (dst.size() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                CScalar lhs = dst.coeff(map.perm[i], map.perm[j], map.perm[k]);
                CScalar rhs = src.coeff(i, j, k).scaled_sign(map.signs[i] * map.signs[j] *
                                                             map.signs[k]);
                if (lhs != rhs) return false;
            }
    return true;
}

namespace {

// Sign-blind canonical form of a coefficient: of {c, -c}, the string that
// sorts first.  Invariant under signed relabelings.
std::string canon_abs(const CScalar& c) {
    std::string a = c.to_string();
    std::string b = (-c).to_string();
    return std::min(a, b);
}

// Per-generator fingerprint: the sorted multiset, over partner generators,
// of the sorted coefficient magnitudes of the commutator with that partner.
std::vector<std::string> fingerprints(const StructureConstants& sc) {
    const int n = sc.size();
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> rows;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<std::string> mags;
            for (int k = 0; k < n; ++k) {
                CScalar c = sc.coeff(i, j, k);
                if (!c.is_zero()) mags.push_back(canon_abs(c));
            }
            std::sort(mags.begin(), mags.end());
            std::string row;
            for (auto& m : mags) row += m + "|";
            rows.push_back(row);
        }
        std::sort(rows.begin(), rows.end());
        for (auto& r : rows) out[i] += r + ";";
    }
    return out;
}

struct MapSearch {
    const StructureConstants& src;
    const StructureConstants& dst;
    int n;
    std::vector<std::vector<bool>> candidate; // fingerprint-compatible targets
    std::vector<int> perm, signs;
    std::vector<bool> used;
    std::vector<BasisMap> found;

    bool consistent_with(int i) const {
        // Incremental check of every triple newly determined by assigning i:
        // pairs (j, i) with any assigned k, and assigned pairs with k == i.
        for (int j = 0; j < i; ++j) {
            for (int k = 0; k <= i; ++k)
                if (!triple_ok(j, i, k)) return false;
            for (int a = 0; a < i; ++a) {
                if (a == j) continue;
                if (!triple_ok(a, j, i)) return false;
            }
        }
        return true;
    }

    bool triple_ok(int i, int j, int k) const {
        if (i == j) return true;
        CScalar lhs = dst.coeff(perm[i], perm[j], perm[k]);
        CScalar rhs = src.coeff(i, j, k).scaled_sign(signs[i] * signs[j] * signs[k]);
        return lhs == rhs;
    }

    void rec(int i) {
        if (i == n) {
            found.push_back(BasisMap{perm, signs});
            return;
        }
        for (int p = 0; p < n; ++p) {
            if (used[p] || !candidate[i][p]) continue;
            used[p] = true;
            perm[i] = p;
            for (int s : {+1, -1}) {
                signs[i] = s;
                if (consistent_with(i)) rec(i + 1);
            }
            used[p] = false;
        }
    }
};

} // namespace

std::optional<BasisMap> find_basis_map(const StructureConstants& src,
                                       const StructureConstants& dst) {
    if (src.size() != dst.size())
        throw std::invalid_argument("find_basis_map: basis sizes differ");
    const int n = src.size();

    auto fp_src = fingerprints(src);
    auto fp_dst = fingerprints(dst);

    MapSearch search{src, dst, n, {}, std::vector<int>(n), std::vector<int>(n),
                     std::vector<bool>(n), {}};
    search.candidate.assign(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int p = 0; p < n; ++p) {
            search.candidate[i][p] = (fp_src[i] == fp_dst[p]);
            any |= search.candidate[i][p];
        }
        if (!any) return std::nullopt;
    }
    search.rec(0);
    if (search.found.empty()) return std::nullopt;

    // Fewest sign flips first, then lexicographic permutation, then the
    // lexicographic sign pattern with +1 before -1.
    auto key = [](const BasisMap& m) {
        int flips = 0;
        std::vector<int> sign_rank;
        for (int s : m.signs) {
            flips += (s < 0);
            sign_rank.push_back(s < 0 ? 1 : 0);
        }
        return std::make_tuple(flips, m.perm, sign_rank);
    };
    return *std::min_element(search.found.begin(), search.found.end(),
                             [&](const BasisMap& a, const BasisMap& b) { return key(a) < key(b); });
}

} // namespace symcheck
