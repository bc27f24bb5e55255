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

#include "symcheck/phase_space.hpp"
#include "symcheck/realizations.hpp"

#include <cmath>

using namespace symcheck;

TEST_CASE("float exponential sanity") {
    // rotation generator exponentiates to a rotation matrix
    RMatrix r = group_element(rotation_generator(), 0.5);
    CHECK(std::abs(r(0, 0) - std::cos(0.5)) < 1e-13);
    CHECK(std::abs(r(0, 1) + std::sin(0.5)) < 1e-13);
    CHECK(std::abs(r(1, 0) - std::sin(0.5)) < 1e-13);

    RMatrix s = group_element(squeeze_generator(), 0.7);
    CHECK(std::abs(s(0, 0) - std::exp(0.7)) < 1e-12);
    CHECK(std::abs(s(1, 1) - std::exp(-0.7)) < 1e-12);
    CHECK(std::abs(s(0, 1)) < 1e-13);
}

TEST_CASE("canonical condition") {
    CHECK(is_canonical(RMatrix::identity(2)));
    CHECK(is_canonical(group_element(rotation_generator(), 1.2)));
    CHECK(is_canonical(group_element(squeeze_generator(), 0.3)));
    CHECK(!is_canonical(RMatrix::diagonal({2.0, 1.0})));
    // dim-4 form is block diagonal
    RMatrix j = symplectic_form(4);
    CHECK(j(0, 1) == 1.0);
    CHECK(j(2, 3) == 1.0);
    CHECK(j(1, 0) == -1.0);
    CHECK_THROWS(symplectic_form(3));
}

TEST_CASE("non-canonical transforms are rejected") {
    CHECK_THROWS_AS((void)transform_gaussian(GaussianState::seed(),
                                             RMatrix::diagonal({2.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("seed state has minimal area pi, invariant under the group") {
    GaussianState seed = GaussianState::seed();
    CHECK(std::abs(uncertainty_area(seed) - M_PI) < 1e-12);
    for (double t : {0.3, 1.2}) {
        auto rot = transform_gaussian(seed, group_element(rotation_generator(), t));
        auto sq  = transform_gaussian(seed, group_element(squeeze_generator(), t));
        CHECK(std::abs(uncertainty_area(rot) - M_PI) < 1e-12);
        CHECK(std::abs(uncertainty_area(sq) - M_PI) < 1e-12);
        // the squeeze deforms the covariance even though the area is fixed
        CHECK(std::abs(sq.covariance(0, 0) - std::exp(2 * t)) < 1e-10);
    }
}

TEST_CASE("squeezed covariance ellipse") {
    GaussianState wide{RMatrix::diagonal({4.0, 4.0})};
    CHECK(std::abs(uncertainty_area(wide) - 4 * M_PI) < 1e-12);
    GaussianState squeezed{RMatrix::diagonal({4.0, 0.25})};
    CHECK(std::abs(uncertainty_area(squeezed) - M_PI) < 1e-12);
}

TEST_CASE("four-dimensional canonical transforms from the ten generators") {
    GeneratorFamily fam = build_sp4_phase_space();
    for (int g = 0; g < fam.basis.size(); ++g)
        for (double t : {-0.4, 0.9}) {
            RMatrix m = group_element(fam.basis.matrix(g), t);
            INFO(fam.basis.label(g), " t=", t);
            CHECK(is_canonical(m));
            CHECK(std::abs(m.det() - 1.0) < 1e-11);
        }
}

TEST_CASE("real-part extraction guards against complex leakage") {
    FMatrix m(2);
    m(0, 0) = {1.0, 0.5};
    CHECK_THROWS_AS((void)RMatrix::from_float(m), std::domain_error);
}
