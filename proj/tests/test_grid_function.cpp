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

#include "conelab/grid_function.hpp"
#include "conelab/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace conelab;

namespace {

// Dense trapezoid rule for int_0^inf x f(x) g(x) dx, evaluating the
// functions pointwise. Independent of the segment formulas.
double trapezoid_inner(const GridFunction& f, const GridFunction& g, int steps = 400000)
{
    const double end = std::max(f.support_end(), g.support_end());
    if (end == 0.0) {
        return 0.0;
    }
    const double h = end / steps;
    double acc = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double x = i * h;
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        acc += w * x * f(x) * g(x);
    }
    return acc * h;
}

GridFunction random_function(CounterRng& rng)
{
    const int k = 2 + static_cast<int>(rng.uniform01() * 5);
    std::vector<double> knots(k, 0.0);
    std::vector<double> values(k, 0.0);
    for (int i = 1; i < k; ++i) {
        knots[i] = knots[i - 1] + rng.uniform(0.1, 2.0);
    }
    for (int i = 0; i + 1 < k; ++i) {
        values[i] = rng.uniform(-1.0, 1.0);
    }
    return GridFunction(knots, values);
}

} // namespace

TEST_SUITE("grid_function")
{
    TEST_CASE("construction is validated")
    {
        CHECK_THROWS(GridFunction({}, {}));
        CHECK_THROWS(GridFunction({0.0, 1.0}, {1.0}));
        CHECK_THROWS(GridFunction({0.5, 1.0}, {1.0, 0.0}));
        CHECK_THROWS(GridFunction({0.0, 1.0, 1.0}, {1.0, 1.0, 0.0}));
        CHECK_THROWS(GridFunction({0.0, 1.0}, {1.0, 1.0}));
        CHECK_THROWS(GridFunction({0.0, 1.0}, {NAN, 0.0}));
        CHECK(GridFunction().is_zero());
    }

    TEST_CASE("hat norm: segment formula agrees with quadrature")
    {
        const auto hat = GridFunction::hat(1.0, 1.0);
        const double oracle = trapezoid_inner(hat, hat);
        CHECK(oracle == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
        CHECK(weighted_norm(hat) * weighted_norm(hat) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    }

    TEST_CASE("indicator-like function has norm 1/sqrt(2)")
    {
        const GridFunction f({0.0, 1.0, 1.0 + 1e-9}, {1.0, 1.0, 0.0});
        CHECK(weighted_norm(f) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
    }

    TEST_CASE("stretching scales the norm linearly")
    {
        const auto f = GridFunction::hat(1.0, 1.0);
        CHECK(weighted_norm(f.stretched(3.0)) == doctest::Approx(3.0 * weighted_norm(f)).epsilon(1e-14));
        CHECK(weighted_distance(f.stretched(3.0), GridFunction()) ==
              doctest::Approx(3.0 * weighted_norm(f)).epsilon(1e-14));
        CHECK_THROWS(f.stretched(0.0));
    }

    TEST_CASE("arithmetic and inner products on random functions")
    {
        for (std::uint64_t i = 0; i < 50; ++i) {
            CounterRng rng(11, Stream::axioms, 0, i);
            const auto f = random_function(rng);
            const auto g = random_function(rng);
            const auto s = f + g;
            const auto d = f - g;
            for (double x : {0.0, 0.3, 1.1, 2.5, 4.0, 9.0}) {
                CHECK(s(x) == doctest::Approx(f(x) + g(x)).epsilon(1e-12));
                CHECK(d(x) == doctest::Approx(f(x) - g(x)).epsilon(1e-12));
            }
            CHECK(weighted_inner(f, g) == doctest::Approx(trapezoid_inner(f, g, 200000)).epsilon(1e-6));
            CHECK(weighted_distance(f, g) == doctest::Approx(weighted_norm(d)).epsilon(1e-12));
            CHECK(weighted_norm(f + GridFunction()) == doctest::Approx(weighted_norm(f)).epsilon(1e-15));
        }
    }

    TEST_CASE("sum of many functions matches the pairwise fold")
    {
        std::vector<GridFunction> fs;
        for (std::uint64_t i = 0; i < 30; ++i) {
            CounterRng rng(5, Stream::axioms, 1, i);
            fs.push_back(random_function(rng).stretched(rng.uniform(0.5, 4.0)));
        }
        GridFunction fold;
        for (const auto& f : fs) {
            fold = fold + f;
        }
        const auto swept = GridFunction::sum(fs);
        CHECK(weighted_distance(swept, fold) < 1e-10);

        std::vector<double> at{0.0, 0.5, 1.0, 3.0, 7.5, 100.0};
        std::vector<double> out(at.size(), 0.0);
        GridFunction::accumulate_sum_on(fs, at, out);
        for (std::size_t k = 0; k < at.size(); ++k) {
            CHECK(out[k] == doctest::Approx(fold(at[k])).epsilon(1e-10));
        }
    }

    TEST_CASE("times scales values, not arguments")
    {
        const auto f = GridFunction::hat(2.0, 1.0);
        CHECK(f.times(2.0)(2.0) == 2.0);
        CHECK(weighted_norm(f.times(-2.0)) == doctest::Approx(2.0 * weighted_norm(f)));
    }
}
