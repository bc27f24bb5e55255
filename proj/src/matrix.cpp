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
#include "symcheck/matrix.hpp"

namespace symcheck {

CMatrix exp_nilpotent(const CMatrix& m) {
    const int n = m.dim();
    CMatrix sum   = CMatrix::identity(n);
    CMatrix power = m;
    Rational factorial(1);
    for (int k = 1; k <= n; ++k) {
        if (power.is_zero()) return sum;
        factorial *= k;
        sum += power.scaled(CScalar(Rational(1) / factorial));
        power = power * m;
    }
    throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
}

} // namespace symcheck
