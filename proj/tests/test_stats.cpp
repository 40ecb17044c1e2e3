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

#include "conelab/stats.hpp"

#include <doctest.h>

#include <cmath>

#include <vector>

using namespace conelab;

TEST_SUITE("stats")
{
    // Reference intervals from statsmodels proportion_confint(method="wilson").
    TEST_CASE("wilson interval matches reference values")
    {
        auto ci = wilson_interval(5, 100);
        CHECK(ci.lo == doctest::Approx(0.021543679154367966).epsilon(1e-12));
        CHECK(ci.hi == doctest::Approx(0.11175046923191914).epsilon(1e-12));
        ci = wilson_interval(0, 50);
        CHECK(ci.lo == 0.0);
        CHECK(ci.hi == doctest::Approx(0.07134759913335874).epsilon(1e-12));
        ci = wilson_interval(1000, 1000000);
        CHECK(ci.lo == doctest::Approx(0.0009399388437436418).epsilon(1e-10));
        CHECK(ci.hi == doctest::Approx(0.0010638949174321755).epsilon(1e-10));
        ci = wilson_interval(50, 50);
        CHECK(ci.hi == 1.0);
        CHECK_THROWS(wilson_interval(3, 2));
        CHECK_THROWS(wilson_interval(0, 0));
    }

    TEST_CASE("interval width follows the square-root law")
    {
        const double w1 = wilson_interval(1000, 1000000).width();
        const double w4 = wilson_interval(4000, 4000000).width();
        const double w2 = wilson_interval(2000, 2000000).width();
        CHECK(w4 / w1 == doctest::Approx(0.5).epsilon(0.1));
        CHECK(w2 / w1 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.1));
    }

    TEST_CASE("empirical quantile uses the inverted cdf")
    {
        const std::vector<double> v{5, 1, 4, 2, 3};
        CHECK(empirical_quantile(v, 0.2) == 1);
        CHECK(empirical_quantile(v, 0.21) == 2);
        CHECK(empirical_quantile(v, 0.95) == 5);
        CHECK(empirical_quantile(v, 1.0) == 5);
        CHECK_THROWS(empirical_quantile(v, 0.0));
        CHECK_THROWS(empirical_quantile(std::vector<double>{}, 0.5));
    }

    TEST_CASE("mean and standard error")
    {
        const std::vector<double> v{1, 2, 3, 4};
        CHECK(mean(v) == 2.5);
        CHECK(standard_error(v) == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    }
}
