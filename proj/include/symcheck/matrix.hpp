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
#include "symcheck/laurent.hpp"

#include <stdexcept>
#include <vector>

namespace symcheck {

/// Dense square matrix over an exact scalar (CScalar or Laurent).
template <class S>
class Matrix {
public:
    Matrix() : dim_(0) {}
    explicit Matrix(int dim) : dim_(dim), e_(std::size_t(dim) * dim) {
        if (dim <= 0) throw std::invalid_argument("Matrix: dimension must be positive");
    }

    static Matrix identity(int dim) {
        Matrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = S(1);
        return m;
    }
    static Matrix zero(int dim) { return Matrix(dim); }

    int dim() const { return dim_; }

    S& operator()(int r, int c) { return e_[std::size_t(r) * dim_ + c]; }
    const S& operator()(int r, int c) const { return e_[std::size_t(r) * dim_ + c]; }

    Matrix operator-() const {
        Matrix out(dim_);
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = -e_[k];
        return out;
    }
    Matrix operator+(const Matrix& o) const {
        check_dim(o);
        Matrix out(dim_);
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] + o.e_[k];
        return out;
    }
    Matrix operator-(const Matrix& o) const { return *this + (-o); }

    Matrix operator*(const Matrix& o) const {
        check_dim(o);
        Matrix out(dim_);
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < dim_; ++k) {
                const S& a = (*this)(i, k);
                if (a.is_zero()) continue; // generator matrices are sparse
                for (int j = 0; j < dim_; ++j) {
                    const S& b = o(k, j);
                    if (!b.is_zero()) out(i, j) += a * b;
                }
            }
        }
        return out;
    }
    Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
    Matrix& operator-=(const Matrix& o) { return *this = *this - o; }

    Matrix scaled(const S& s) const {
        Matrix out(dim_);
        for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
        return out;
    }

    /// Conjugate transpose.
    Matrix dagger() const {
        Matrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j).conj();
        return out;
    }

    Matrix transpose() const {
        Matrix out(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_zero() const {
        for (auto& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    void check_dim(const Matrix& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("Matrix: dimension mismatch");
    }

    int dim_;
    std::vector<S> e_;
};

using CMatrix = Matrix<CScalar>;
using LMatrix = Matrix<Laurent>;

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
    return a * b - b * a;
}

inline LMatrix to_laurent(const CMatrix& m) {
    LMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out(i, j) = Laurent(m(i, j));
    return out;
}

/// Exact exp of a nilpotent matrix via the terminating power series.
/// Throws std::domain_error if no power up to dim is exactly zero.
CMatrix exp_nilpotent(const CMatrix& m);

} // namespace symcheck
