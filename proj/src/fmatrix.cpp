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
#include "symcheck/fmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace symcheck {

FMatrix FMatrix::identity(int dim) {
    FMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

FMatrix FMatrix::from_exact(const CMatrix& m) {
    FMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j).to_complex();
    return out;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
    FMatrix out(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
    return out;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
    FMatrix out(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
    FMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            auto a = (*this)(i, k);
            if (a == 0.0) continue;
            for (int j = 0; j < dim_; ++j) out(i, j) += a * o(k, j);
        }
    return out;
}

FMatrix FMatrix::scaled(std::complex<double> s) const {
    FMatrix out(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
    return out;
}

FMatrix FMatrix::transpose() const {
    FMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

double FMatrix::max_abs() const {
    double m = 0;
    for (auto& z : e_) m = std::max(m, std::abs(z));
    return m;
}

double FMatrix::max_imag() const {
    double m = 0;
    for (auto& z : e_) m = std::max(m, std::abs(z.imag()));
    return m;
}

FMatrix exp_matrix(const FMatrix& m) {
    // Scale until the norm is small, sum the Taylor series to machine
    // precision, then square back.
    int squarings = 0;
    double norm   = m.max_abs() * m.dim();
    while (norm > 0.5) {
        norm /= 2;
        ++squarings;
    }
    FMatrix scaled = m.scaled(std::ldexp(1.0, -squarings));
    FMatrix sum    = FMatrix::identity(m.dim());
    FMatrix term   = FMatrix::identity(m.dim());
    for (int k = 1; k <= 24; ++k) {
        term = (term * scaled).scaled(1.0 / k);
        sum  = sum + term;
        if (term.max_abs() < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

FMatrix exp_float(const CMatrix& generator, double t) {
    return exp_matrix(FMatrix::from_exact(generator).scaled(std::complex<double>(0, -t)));
}

} // namespace symcheck
