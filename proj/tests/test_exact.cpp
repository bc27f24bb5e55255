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

#include "symcheck/laurent.hpp"
#include "symcheck/matrix.hpp"

#include <cmath>
#include <random>

using namespace symcheck;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("surd canonicalization") {
    CHECK(Surd::sqrt_of(12) == Surd(Rational(2)) * Surd::sqrt_of(3));
    CHECK(Surd::sqrt_of(9) == Surd(3));
    CHECK(Surd::sqrt_of(0).is_zero());
    CHECK(Surd::sqrt_of(2) * Surd::sqrt_of(8) == Surd(4));
    CHECK(Surd::sqrt_of(2) * Surd::sqrt_of(3) == Surd::sqrt_of(6));
}

TEST_CASE("surd parsing") {
    Surd s = Surd::parse("1/2*sqrt(2)-3");
    CHECK(s == Surd(Rational(1, 2)) * Surd::sqrt_of(2) - Surd(3));
    CHECK(Surd::parse(s.to_string()) == s);
    CHECK(Surd::parse("0").is_zero());
}

TEST_CASE("surd inverse over several radicands") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-4, 4);
    const std::int64_t rad[4] = {1, 2, 3, 6};
    for (int trial = 0; trial < 50; ++trial) {
        Surd s;
        for (auto d : rad) s += Surd(Rational(coeff(rng))) * Surd::sqrt_of(d);
        if (s.is_zero()) continue;
        CHECK(s * s.inverse() == Surd(1));
    }
    CHECK_THROWS(Surd().inverse());
}

TEST_CASE("surd field axioms on random samples") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto sample = [&] {
        return Surd(Rational(coeff(rng))) + Surd(Rational(coeff(rng))) * Surd::sqrt_of(2) +
               Surd(Rational(coeff(rng))) * Surd::sqrt_of(5);
    };
    for (int trial = 0; trial < 30; ++trial) {
        Surd a = sample(), b = sample(), c = sample();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(std::abs((a * b).to_double() - a.to_double() * b.to_double()) < 1e-9);
    }
}

TEST_CASE("complex scalar arithmetic") {
    CScalar i = CScalar::i();
    CHECK(i * i == CScalar(-1));
    CHECK(i.conj() == -i);
    CScalar z(Surd(Rational(1, 2)), Surd::sqrt_of(3));
    CHECK(z * z.inverse() == CScalar(1));
    CHECK(z / z == CScalar(1));
    CHECK((z * z.conj()).imag().is_zero());
}

TEST_CASE("laurent ring operations") {
    Laurent x = Laurent::eps(1);
    Laurent p = Laurent(CScalar(2)) + x * x; // 2 + eps^2
    CHECK(p.coefficient(0) == CScalar(2));
    CHECK(p.coefficient(2) == CScalar(1));
    CHECK(p.min_degree() == 0);
    CHECK(p.max_degree() == 2);
    CHECK(p.shifted(-2).min_degree() == -2);
    CHECK((x * Laurent::eps(-1)) == Laurent(CScalar(1)));
    CHECK((p - p).is_zero());
}

TEST_CASE("laurent substitution, exact and numeric") {
    // 3*eps^-1 + 1/2 + eps
    Laurent q = Laurent::monomial(CScalar(3), -1) + Laurent(CScalar(Rational(1, 2))) +
                Laurent::eps(1);
    CHECK(q.substitute(Rational(2)) == CScalar(Rational(4)));
    CHECK(std::abs(q.substitute(2.0) - std::complex<double>(4.0, 0.0)) < 1e-12);
}

TEST_CASE("exact matrix algebra") {
    CMatrix a(2), b(2);
    a(0, 1) = CScalar(1);
    b(1, 0) = CScalar(1);
    CMatrix c = commutator(a, b); // diag(1, -1)
    CHECK(c(0, 0) == CScalar(1));
    CHECK(c(1, 1) == CScalar(-1));
    CHECK(c.dagger() == c);
    CHECK((a * b - b * a) == c);
}

TEST_CASE("nilpotent exponential") {
    CMatrix n(3);
    n(0, 1) = CScalar(2);
    n(1, 2) = CScalar(Rational(1, 3));
    CMatrix e  = exp_nilpotent(n);
    CMatrix ei = exp_nilpotent(-n);
    CHECK(e * ei == CMatrix::identity(3));
    CHECK(e(0, 2) == CScalar(Rational(1, 3))); // (1/2) * 2 * 1/3
    CMatrix not_nilpotent = CMatrix::identity(2);
    CHECK_THROWS_AS(exp_nilpotent(not_nilpotent), std::domain_error);
}
