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

#include "symcheck/fmatrix.hpp"

#include <vector>

namespace symcheck {

/// Real square matrix for phase-space transforms (dim 2 or 4).
class RMatrix {
public:
    RMatrix() : dim_(0) {}
    explicit RMatrix(int dim) : dim_(dim), e_(std::size_t(dim) * dim) {}

    static RMatrix identity(int dim);
    static RMatrix diagonal(const std::vector<double>& d);
    /// Real part; throws if any imaginary part exceeds tol.
    static RMatrix from_float(const FMatrix& m, double tol = 1e-12);

    int dim() const { return dim_; }
    double& operator()(int r, int c) { return e_[std::size_t(r) * dim_ + c]; }
    double operator()(int r, int c) const { return e_[std::size_t(r) * dim_ + c]; }

    RMatrix operator*(const RMatrix& o) const;
    RMatrix operator-(const RMatrix& o) const;
    RMatrix transpose() const;
    double det() const;
    double max_abs() const;

private:
    int dim_;
    std::vector<double> e_;
};

/// Centered Gaussian Wigner function, represented by its covariance.
/// The seed state has identity covariance, W = (1/pi) exp(-(x^2+p^2)).
struct GaussianState {
    RMatrix covariance; // symmetric positive-definite, dim 2 or 4

    static GaussianState seed(int dim = 2);
};

/// The symplectic form: dim 4 gives the block form on (x1,p1,x2,p2),
/// dim 2 its upper-left block.
RMatrix symplectic_form(int dim);

/// True iff max-norm of M J M^T - J is within tol.
bool is_canonical(const RMatrix& m, double tol = 1e-12);

/// Covariance -> M covariance M^T; throws for non-canonical M.
GaussianState transform_gaussian(const GaussianState& state, const RMatrix& m,
                                 double tol = 1e-12);

/// Area pi * sqrt(det covariance) of the 1-sigma ellipse (dim 2 only).
double uncertainty_area(const GaussianState& state);

/// The 2x2 phase-space rotation generator: exp_float(., theta) is the
/// rotation matrix.
CMatrix rotation_generator();
/// The squeeze generator: exp_float(., eta) = diag(e^eta, e^-eta).
CMatrix squeeze_generator();

/// Group element exp(-i t G) as a real phase-space matrix.
RMatrix group_element(const CMatrix& generator, double t);

} // namespace symcheck
