/*
   Copyright 2026 The conelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "conelab/errors.hpp"
#include "conelab/integrate.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace conelab;

TEST_SUITE("integrate")
{
    TEST_CASE("finite integrals against closed forms")
    {
        CHECK(integrate_log([](double t) { return std::sqrt(t); }, 1.0, 1e6, 1e-12) ==
              doctest::Approx((std::pow(1e6, 1.5) - 1.0) / 1.5).epsilon(1e-11));
        CHECK(integrate_log([](double t) { return 1.0 / t; }, 2.0, 2e8, 1e-12) ==
              doctest::Approx(std::log(1e8)).epsilon(1e-11));
        // A kink at t = 3 handled through a breakpoint.
        const std::vector<double> cuts{3.0};
        CHECK(integrate_log([](double t) { return std::min(t, 3.0); }, 1.0, 5.0, 1e-12, cuts) ==
              doctest::Approx(4.0 + 6.0).epsilon(1e-12));
        CHECK(integrate_log([](double) { return 1.0; }, 2.0, 2.0, 1e-12) == 0.0);
    }

    TEST_CASE("tail integrals converge or report divergence")
    {
        CHECK(integrate_tail([](double t) { return std::pow(t, -3.0); }, 10.0, 1e-12) ==
              doctest::Approx(0.5e-2).epsilon(1e-10));
        CHECK(integrate_tail([](double t) { return std::pow(t, -1.5); }, 1.0, 1e-12) ==
              doctest::Approx(2.0).epsilon(1e-9));
        CHECK_THROWS_AS(integrate_tail([](double t) { return 1.0 / t; }, 1.0, 1e-10), IntegralDiverges);
        CHECK_THROWS_AS(integrate_tail([](double t) { return std::pow(t, -0.5); }, 1.0, 1e-10), IntegralDiverges);
    }
}
