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

#include "symcheck/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace symcheck {

/// Exact element of the ring Q(sqrt(2), sqrt(3), ...): a finite sum
/// sum_d q_d * sqrt(d) with square-free radicands d and rational q_d.
/// Radicand 1 carries the rational part.  Closed under +, -, * and,
/// for nonzero values, under inversion.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& q) {
        if (q != 0) terms_[1] = q;
    }
    Surd(long long n) : Surd(Rational(n)) {}

    /// sqrt(n) for n >= 0, canonicalized: sqrt(12) becomes 2*sqrt(3).
    static Surd sqrt_of(std::int64_t n);

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    /// Rational value; throws unless is_rational().
    Rational rational_value() const;

    Surd operator-() const;
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const { return *this + (-o); }
    Surd operator*(const Surd& o) const;
    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator-=(const Surd& o) { return *this = *this - o; }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws for zero.
    Surd inverse() const;

    bool operator==(const Surd& o) const { return terms_ == o.terms_; }
    bool operator!=(const Surd& o) const { return !(*this == o); }
    bool operator<(const Surd& o) const { return terms_ < o.terms_; }

    double to_double() const;
    std::string to_string() const;

    /// Parses "q" or "q*sqrt(d)" terms joined by '+'/'-', e.g. "1/2*sqrt(2)-3".
    static Surd parse(const std::string& s);

private:
    void add_term(std::int64_t radicand, const Rational& coeff);
    /// Flips the sign of every term whose radicand is divisible by p.
    Surd conjugate_wrt(std::int64_t p) const;

    std::map<std::int64_t, Rational> terms_;
};

} // namespace symcheck
