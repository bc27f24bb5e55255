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

#include "symcheck/surd.hpp"

#include <complex>
#include <string>

namespace symcheck {

/// Exact complex number with surd real and imaginary parts.
class CScalar {
public:
    CScalar() = default;
    CScalar(Surd re, Surd im = Surd()) : re_(std::move(re)), im_(std::move(im)) {}
    CScalar(const Rational& q) : re_(q) {}
    CScalar(long long n) : re_(Rational(n)) {}

    static CScalar i() { return CScalar(Surd(), Surd(Rational(1))); }

    const Surd& real() const { return re_; }
    const Surd& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    CScalar operator-() const { return CScalar(-re_, -im_); }
    CScalar operator+(const CScalar& o) const { return CScalar(re_ + o.re_, im_ + o.im_); }
    CScalar operator-(const CScalar& o) const { return CScalar(re_ - o.re_, im_ - o.im_); }
    CScalar operator*(const CScalar& o) const {
        return CScalar(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    CScalar& operator+=(const CScalar& o) { return *this = *this + o; }
    CScalar& operator-=(const CScalar& o) { return *this = *this - o; }
    CScalar& operator*=(const CScalar& o) { return *this = *this * o; }

    CScalar conj() const { return CScalar(re_, -im_); }
    CScalar scaled_sign(int s) const { return s < 0 ? -*this : *this; }

    CScalar inverse() const {
        Surd norm = re_ * re_ + im_ * im_;
        Surd inv  = norm.inverse();
        return CScalar(re_ * inv, -(im_ * inv));
    }
    CScalar operator/(const CScalar& o) const { return *this * o.inverse(); }

    bool operator==(const CScalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const CScalar& o) const { return !(*this == o); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    std::string to_string() const;

private:
    Surd re_, im_;
};

inline CScalar operator*(const Rational& q, const CScalar& c) { return CScalar(q) * c; }

inline std::string CScalar::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    if (!re_.is_zero()) s = re_.to_string();
    if (!im_.is_zero()) {
        std::string im = im_.to_string();
        if (!s.empty() && im[0] != '-') s += "+";
        s += "(" + im + ")*i";
    }
    return s;
}

} // namespace symcheck
