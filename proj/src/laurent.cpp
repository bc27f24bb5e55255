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
#include "symcheck/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace symcheck {

CScalar Laurent::substitute(const Rational& eps_value) const {
    if (eps_value == 0 && min_degree() < 0 && !is_zero())
        throw std::domain_error("Laurent: substituting 0 into a pole");
    CScalar out;
    for (auto& [k, c] : coeffs_) {
        Rational pw(1);
        for (int n = 0; n < std::abs(k); ++n) pw *= eps_value;
        if (k < 0) pw = Rational(1) / pw;
        out += pw * c;
    }
    return out;
}

std::complex<double> Laurent::substitute(double eps_value) const {
    std::complex<double> out = 0;
    for (auto& [k, c] : coeffs_) out += c.to_complex() * std::pow(eps_value, k);
    return out;
}

std::string Laurent::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : coeffs_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")";
        if (k != 0) os << "*eps^" << k;
        first = false;
    }
    return os.str();
}

} // namespace symcheck
