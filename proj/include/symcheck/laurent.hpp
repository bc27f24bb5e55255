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

#include "symcheck/cscalar.hpp"

#include <complex>
#include <map>
#include <string>

namespace symcheck {

/// Laurent polynomial sum_k c_k eps^k over CScalar, for the contraction
/// parameter eps.  No zero coefficients are stored.
class Laurent {
public:
    Laurent() = default;
    Laurent(const CScalar& c) {
        if (!c.is_zero()) coeffs_[0] = c;
    }
    Laurent(long long n) : Laurent(CScalar(n)) {}

    /// c * eps^k
    static Laurent monomial(const CScalar& c, int k) {
        Laurent out;
        if (!c.is_zero()) out.coeffs_[k] = c;
        return out;
    }
    static Laurent eps(int k = 1) { return monomial(CScalar(1), k); }

    const std::map<int, CScalar>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    CScalar coefficient(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? CScalar() : it->second;
    }

    Laurent operator-() const {
        Laurent out;
        for (auto& [k, c] : coeffs_) out.coeffs_[k] = -c;
        return out;
    }
    Laurent operator+(const Laurent& o) const {
        Laurent out = *this;
        for (auto& [k, c] : o.coeffs_) out.add(k, c);
        return out;
    }
    Laurent operator-(const Laurent& o) const { return *this + (-o); }
    Laurent operator*(const Laurent& o) const {
        Laurent out;
        for (auto& [k1, c1] : coeffs_)
            for (auto& [k2, c2] : o.coeffs_) out.add(k1 + k2, c1 * c2);
        return out;
    }
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    /// Multiplies by eps^k (exact shift of all exponents).
    Laurent shifted(int k) const {
        Laurent out;
        for (auto& [d, c] : coeffs_) out.coeffs_[d + k] = c;
        return out;
    }

    /// eps treated as real: conjugates coefficients only.
    Laurent conj() const {
        Laurent out;
        for (auto& [k, c] : coeffs_) out.coeffs_[k] = c.conj();
        return out;
    }

    bool operator==(const Laurent& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    /// Exact substitution of a rational eps value.
    CScalar substitute(const Rational& eps_value) const;
    /// Numeric substitution.
    std::complex<double> substitute(double eps_value) const;

    std::string to_string() const;

private:
    void add(int k, const CScalar& c) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_[k] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    std::map<int, CScalar> coeffs_;
};

} // namespace symcheck
