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
#include "symcheck/phase_space.hpp"

#include <cmath>
#include <stdexcept>

namespace symcheck {

RMatrix RMatrix::identity(int dim) {
    RMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

RMatrix RMatrix::diagonal(const std::vector<double>& d) {
    RMatrix m(int(d.size()));
    for (int i = 0; i < m.dim_; ++i) m(i, i) = d[i];
    return m;
}

RMatrix RMatrix::from_float(const FMatrix& m, double tol) {
    if (m.max_imag() > tol)
        throw std::domain_error("RMatrix::from_float: matrix has imaginary parts");
    RMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) out(r, c) = m(r, c).real();
    return out;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    RMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k)
            for (int j = 0; j < dim_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    return out;
}

RMatrix RMatrix::operator-(const RMatrix& o) const {
    RMatrix out(dim_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] - o.e_[k];
    return out;
}

RMatrix RMatrix::transpose() const {
    RMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

double RMatrix::det() const {
    // LU with partial pivoting; dims here are at most 4.
    RMatrix a = *this;
    double d  = 1.0;
    for (int col = 0; col < dim_; ++col) {
        int piv = col;
        for (int r = col + 1; r < dim_; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int c = 0; c < dim_; ++c) std::swap(a(piv, c), a(col, c));
            d = -d;
        }
        d *= a(col, col);
        for (int r = col + 1; r < dim_; ++r) {
            double f = a(r, col) / a(col, col);
            for (int c = col; c < dim_; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return d;
}

double RMatrix::max_abs() const {
    double m = 0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

GaussianState GaussianState::seed(int dim) { return {RMatrix::identity(dim)}; }

RMatrix symplectic_form(int dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("symplectic_form: dim must be 2 or 4");
    RMatrix j(dim);
    for (int b = 0; b < dim / 2; ++b) {
        j(2 * b, 2 * b + 1) = 1.0;
        j(2 * b + 1, 2 * b) = -1.0;
    }
    return j;
}

bool is_canonical(const RMatrix& m, double tol) {
    RMatrix j = symplectic_form(m.dim());
    return (m * j * m.transpose() - j).max_abs() <= tol;
}

GaussianState transform_gaussian(const GaussianState& state, const RMatrix& m, double tol) {
    if (!is_canonical(m, tol))
        throw std::invalid_argument("transform_gaussian: matrix is not canonical");
    return {m * state.covariance * m.transpose()};
}

double uncertainty_area(const GaussianState& state) {
    if (state.covariance.dim() != 2)
        throw std::invalid_argument("uncertainty_area: defined for dim 2");
    return M_PI * std::sqrt(state.covariance.det());
}

CMatrix rotation_generator() {
    // sigma_2: exp(-i theta .) rotates (x, p) by theta
    CMatrix g(2);
    g(0, 1) = -CScalar::i();
    g(1, 0) = CScalar::i();
    return g;
}

CMatrix squeeze_generator() {
    // i sigma_3: exp(-i eta .) = diag(e^eta, e^-eta)
    CMatrix g(2);
    g(0, 0) = CScalar::i();
    g(1, 1) = -CScalar::i();
    return g;
}

RMatrix group_element(const CMatrix& generator, double t) {
    return RMatrix::from_float(exp_float(generator, t));
}

} // namespace symcheck
