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

#include "symcheck/matrix.hpp"

#include <complex>
#include <vector>

namespace symcheck {

/// Small dense complex float matrix, used only where results are allowed
/// floating point (group elements, phase-space transforms).
class FMatrix {
public:
    FMatrix() : dim_(0) {}
    explicit FMatrix(int dim) : dim_(dim), e_(std::size_t(dim) * dim) {}

    static FMatrix identity(int dim);
    static FMatrix from_exact(const CMatrix& m);

    int dim() const { return dim_; }
    std::complex<double>& operator()(int r, int c) { return e_[std::size_t(r) * dim_ + c]; }
    const std::complex<double>& operator()(int r, int c) const {
        return e_[std::size_t(r) * dim_ + c];
    }

    FMatrix operator+(const FMatrix& o) const;
    FMatrix operator-(const FMatrix& o) const;
    FMatrix operator*(const FMatrix& o) const;
    FMatrix scaled(std::complex<double> s) const;
    FMatrix transpose() const;

    double max_abs() const;
    double max_imag() const;

    bool is_real(double tol = 1e-12) const { return max_imag() <= tol; }

private:
    int dim_;
    std::vector<std::complex<double>> e_;
};

/// exp(M) by scaling and squaring with a Taylor series; accurate to
/// ~1e-14 relative for the small well-conditioned matrices used here.
FMatrix exp_matrix(const FMatrix& m);

/// exp(-i t G) for an exact generator G.
FMatrix exp_float(const CMatrix& generator, double t);

} // namespace symcheck
