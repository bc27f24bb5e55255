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
#include "symcheck/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace symcheck {

namespace {

// n = square * squarefree, by trial division; radicands stay small here.
void split_square(std::int64_t n, std::int64_t& square_root, std::int64_t& squarefree) {
    square_root = 1;
    squarefree  = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        int mult = 0;
        while (n % p == 0) {
            n /= p;
            ++mult;
        }
        for (int k = 0; k < mult / 2; ++k) square_root *= p;
        if (mult % 2) squarefree *= p;
    }
    squarefree *= n;
}

} // namespace

Surd Surd::sqrt_of(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("sqrt_of: negative radicand");
    if (n == 0) return Surd();
    std::int64_t s, d;
    split_square(n, s, d);
    Surd out;
    out.terms_[d] = Rational(s);
    return out;
}

Rational Surd::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("Surd is irrational: " + to_string());
    return terms_.begin()->second;
}

void Surd::add_term(std::int64_t radicand, const Rational& coeff) {
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        if (coeff != 0) terms_[radicand] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Surd Surd::operator-() const {
    Surd out;
    for (auto& [d, q] : terms_) out.terms_[d] = -q;
    return out;
}

Surd Surd::operator+(const Surd& o) const {
    Surd out = *this;
    for (auto& [d, q] : o.terms_) out.add_term(d, q);
    return out;
}

Surd Surd::operator*(const Surd& o) const {
    Surd out;
    for (auto& [d1, q1] : terms_) {
        for (auto& [d2, q2] : o.terms_) {
            // sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2), g = gcd(d1,d2)
            std::int64_t s, d;
            split_square(d1 * d2, s, d);
            out.add_term(d, q1 * q2 * s);
        }
    }
    return out;
}

Surd Surd::conjugate_wrt(std::int64_t p) const {
    Surd out;
    for (auto& [d, q] : terms_) out.terms_[d] = (d % p == 0) ? -q : q;
    return out;
}

Surd Surd::inverse() const {
    if (is_zero()) throw std::domain_error("Surd: division by zero");
    if (is_rational()) {
        Surd out;
        out.terms_[1] = Rational(1) / terms_.begin()->second;
        return out;
    }
    // Smallest prime dividing some radicand; conjugating w.r.t. it and
    // multiplying removes that prime from all radicands, so this recurses
    // down to the rational case.
    std::int64_t p = 0;
    for (auto& [d, q] : terms_) {
        if (d == 1) continue;
        std::int64_t spf = d;
        for (std::int64_t f = 2; f * f <= d; ++f) {
            if (d % f == 0) {
                spf = f;
                break;
            }
        }
        if (p == 0 || spf < p) p = spf;
    }
    Surd conj = conjugate_wrt(p);
    Surd norm = *this * conj; // invariant under the conjugation, p eliminated
    return conj * norm.inverse();
}

double Surd::to_double() const {
    double x = 0;
    for (auto& [d, q] : terms_) x += symcheck::to_double(q) * std::sqrt(double(d));
    return x;
}

std::string Surd::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, q] : terms_) {
        std::string qs = symcheck::to_string(q);
        if (!first && qs[0] != '-') os << "+";
        os << qs;
        if (d != 1) os << "*sqrt(" << d << ")";
        first = false;
    }
    return os.str();
}

Surd Surd::parse(const std::string& s) {
    Surd out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = pos + 1;
        while (next < s.size() && s[next] != '+' && s[next] != '-') ++next;
        std::string term = s.substr(pos, next - pos);
        if (!term.empty() && term[0] == '+') term.erase(0, 1);
        auto star = term.find("*sqrt(");
        if (star == std::string::npos) {
            out.add_term(1, parse_rational(term));
        } else {
            Rational q = parse_rational(term.substr(0, star));
            auto close = term.find(')', star);
            std::int64_t n = std::stoll(term.substr(star + 6, close - star - 6));
            out += Surd(q) * Surd::sqrt_of(n);
        }
        pos = next;
    }
    return out;
}

} // namespace symcheck
