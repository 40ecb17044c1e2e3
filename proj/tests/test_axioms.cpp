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

#include "conelab/axioms.hpp"
#include "conelab/errors.hpp"
#include "conelab/samplers.hpp"

#include <doctest.h>

#include <cmath>

using namespace conelab;

namespace {

// Non-negative reals with a lopsided addition; commutativity fails.
struct LopsidedCone {
    using element_type = double;
    double add(double x, double y) const { return x + 2.0 * y; }
    double scale(double a, double x) const { return a * x; }
    double neutral() const { return 0.0; }
    double origin() const { return 0.0; }
    double distance(double x, double y) const { return std::abs(x - y); }
    ConeFlags flags() const { return {}; }
    std::string name() const { return "lopsided"; }
    bool direction_in(const DirectionPredicate&, double) const { return true; }
    std::string describe(double x) const { return std::to_string(x); }
};

} // namespace

TEST_SUITE("axioms")
{
    TEST_CASE("max cone: declared axioms hold, second distributivity fails verbatim")
    {
        const MaxCone cone;
        const auto rep = axiom_suite(cone, axiom_sampler(cone), 500, 1e-9, 1);
        CHECK(rep.declared_ok());
        CHECK_NOTHROW(require_declared(rep));
        const auto* sd = rep.find("second_distributivity");
        REQUIRE(sd != nullptr);
        CHECK_FALSE(sd->declared);
        CHECK_FALSE(sd->passed);
        CHECK(sd->counterexample == "a=1, b=1, x=1: (a+b)x=2, ax+bx=1");
        CHECK(rep.find("pointedness")->passed);
        CHECK(rep.find("sub_invariance")->passed);
        CHECK(rep.find("neutral_element")->passed);
        CHECK_FALSE(rep.find("invariance")->passed);
    }

    TEST_CASE("a false claim is a declared failure")
    {
        ConeFlags f = MaxCone::default_flags();
        f.invariant = true;
        const MaxCone cone(f);
        const auto rep = axiom_suite(cone, axiom_sampler(cone), 200, 1e-9, 1);
        CHECK_FALSE(rep.declared_ok());
        CHECK_THROWS_AS(require_declared(rep), AxiomViolation);
    }

    TEST_CASE("union cone is not sub-invariant")
    {
        const UnionCone cone(1);
        const auto rep = axiom_suite(cone, axiom_sampler(cone), 300, 1e-9, 2);
        CHECK(rep.declared_ok());
        const auto* si = rep.find("sub_invariance");
        CHECK_FALSE(si->declared);
        CHECK_FALSE(si->passed);
        CHECK(si->counterexample.find("9") != std::string::npos);
        CHECK_FALSE(rep.find("neutral_element")->passed);
    }

    TEST_CASE("functions cone")
    {
        const FunctionsCone cone;
        const auto rep = axiom_suite(cone, axiom_sampler(cone), 300, 1e-9, 3);
        CHECK(rep.declared_ok());
        CHECK(rep.find("invariance")->passed);
        CHECK(rep.find("norm_subadditivity")->passed);
        CHECK_FALSE(rep.find("second_distributivity")->passed);
    }

    TEST_CASE("convex bodies satisfy every declared axiom")
    {
        for (auto metric : {BodyMetric::hausdorff, BodyMetric::lp}) {
            const ConvexBodiesCone cone(2, metric, 2.0, 360);
            const auto rep = axiom_suite(cone, axiom_sampler(cone), 200, 1e-8, 4);
            CHECK(rep.declared_ok());
            CHECK(rep.find("second_distributivity")->declared);
            CHECK(rep.find("second_distributivity")->passed);
        }
    }

    TEST_CASE("a broken addition is caught")
    {
        const LopsidedCone cone;
        AxiomSampler<double> s;
        s.element = [](CounterRng& r) { return r.uniform(0.0, 5.0); };
        s.scalar = [](CounterRng& r) { return r.uniform(0.1, 3.0); };
        const auto rep = axiom_suite(cone, s, 100, 1e-9, 5);
        CHECK_FALSE(rep.find("commutativity")->passed);
        CHECK_FALSE(rep.declared_ok());
        CHECK(rep.find("metric")->passed);
    }

    TEST_CASE("suite is reproducible")
    {
        const FunctionsCone cone;
        const auto a = axiom_suite(cone, axiom_sampler(cone), 100, 1e-9, 9);
        const auto b = axiom_suite(cone, axiom_sampler(cone), 100, 1e-9, 9);
        REQUIRE(a.results.size() == b.results.size());
        for (std::size_t i = 0; i < a.results.size(); ++i) {
            CHECK(a.results[i].failures == b.results[i].failures);
            CHECK(a.results[i].counterexample == b.results[i].counterexample);
        }
    }
}
