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
#include "conelab/ldp.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

using namespace conelab;

namespace {

TheoremSettings settings(std::vector<std::uint64_t> grid, double exponent, double coeff, std::uint64_t trials,
                         std::uint64_t seed = 1)
{
    TheoremSettings s;
    s.n_grid = std::move(grid);
    s.schedule = {exponent, coeff};
    s.trials = trials;
    s.seed = seed;
    s.cond4_replicates = 500;
    s.sumconv_replicates = 2000;
    return s;
}

bool same_rows(const std::vector<EstimateRow>& a, const std::vector<EstimateRow>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].successes != b[i].successes || a[i].p_hat != b[i].p_hat || a[i].ratio != b[i].ratio ||
            a[i].ci_lo != b[i].ci_lo || a[i].ci_hi != b[i].ci_hi) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST_SUITE("ldp")
{
    TEST_CASE("partial sums")
    {
        const MaxCone mc;
        const std::vector<double> xs{3.0, 7.0, 2.0};
        CHECK(partial_sum(mc, std::span<const double>(xs)) == 7.0);

        const ConvexBodiesCone cb(2, BodyMetric::hausdorff);
        const Point o{0, 0, 0};
        const std::vector<Polytope> segs{Polytope::segment(2, o, {1, 0, 0}), Polytope::segment(2, o, {0, 1, 0})};
        const auto sq = partial_sum(cb, std::span<const Polytope>(segs));
        CHECK(sq.size() == 4);
        CHECK(cb.distance(sq, Polytope(2, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) < 1e-12);
        CHECK_THROWS(partial_sum(mc, std::span<const double>()));
    }

    TEST_CASE("partial sums do not depend on order")
    {
        const ConvexBodiesCone cb(2, BodyMetric::hausdorff);
        const FunctionsCone fc;
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(cb, preset("random-triangle"));
        const auto fsp = make_spectral(fc, {"hat-function", 1.0, 0.5, {}});
        const Model<ConvexBodiesCone> m{cb, spec, sp};
        const Model<FunctionsCone> fm{fc, spec, fsp};
        std::vector<Polytope> xs;
        std::vector<GridFunction> fs;
        for (std::uint64_t i = 0; i < 12; ++i) {
            CounterRng rng(71, Stream::replicate, 0, i);
            xs.push_back(sample_element(m, rng));
            fs.push_back(sample_element(fm, rng));
        }
        const auto base = partial_sum(cb, std::span<const Polytope>(xs));
        const auto fbase = partial_sum(fc, std::span<const GridFunction>(fs));
        std::vector<std::size_t> idx(xs.size());
        std::iota(idx.begin(), idx.end(), 0);
        for (std::uint64_t k = 0; k < 10; ++k) {
            CounterRng rng(72, Stream::replicate, 0, k);
            for (std::size_t i = idx.size() - 1; i > 0; --i) {
                std::swap(idx[i], idx[static_cast<std::size_t>(rng.uniform01() * static_cast<double>(i + 1))]);
            }
            Polytope acc = xs[idx[0]];
            GridFunction facc = fs[idx[0]];
            for (std::size_t i = 1; i < idx.size(); ++i) {
                acc = cb.add(acc, xs[idx[i]]);
                facc = fc.add(facc, fs[idx[i]]);
            }
            CHECK(cb.distance(acc, base) <= 1e-9 * (1 + norm(cb, base)));
            CHECK(fc.distance(facc, fbase) <= 1e-9 * (1 + norm(fc, fbase)));
        }
    }

    TEST_CASE("exact max-cone probability")
    {
        const RegVarSpec spec(1.5, 1.0);
        const PolarEvent ev(1.0, FullSphere{});
        CHECK(exact_max_cone_prob(spec, ev, 50, 100.0) == doctest::Approx(1.0 - std::pow(0.999, 50)).epsilon(1e-12));
        CHECK(exact_max_cone_prob(spec, ev, 50, 100.0) == doctest::Approx(0.0487943718).epsilon(1e-9));
        CHECK(exact_max_cone_prob(spec, ev, 1, 7.0) == doctest::Approx(spec.tail_prob(7.0)).epsilon(1e-14));
        CHECK(exact_max_cone_prob(RegVarSpec(2.0, 1.0), ev, 10, 1e300) == 0.0);
        CHECK(exact_max_cone_prob(spec, PolarEvent(0.1, FullSphere{}), 3, 1.0) == 1.0);
        CHECK_THROWS_AS(exact_max_cone_prob(spec, PolarEvent(1.0, CoordinateThreshold{0.5}), 5, 10.0),
                        PredicateUnsupported);
    }

    TEST_CASE("max cone, exact rows")
    {
        const MaxCone mc;
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(mc, preset("point-mass-direction"));
        const Model<MaxCone> m{mc, spec, sp};
        auto s = settings({10, 100, 1000, 10000}, 1.4, 1.0, 1000);
        const auto r = theorem1_run(m, s);
        REQUIRE(r.rows.size() == 4);
        for (const auto& row : r.rows) {
            CHECK(row.exact);
            CHECK(row.gamma_n * static_cast<double>(row.n) * spec.tail_prob(row.lambda_n) ==
                  doctest::Approx(1.0).epsilon(1e-14));
            const double n = static_cast<double>(row.n);
            const double q = std::pow(row.lambda_n, -1.5);
            // Second-order expansion of 1 - (1 - q)^n.
            CHECK(row.ratio == doctest::Approx(1.0 - (n - 1) * q / 2).epsilon(2 * n * n * q * q + 1e-12));
            CHECK(row.ci_lo <= row.p_hat);
            CHECK(row.p_hat <= row.ci_hi);
        }
        CHECK(std::abs(r.rows[1].ratio - 1.0) <= 0.01);
        CHECK(std::abs(r.rows[3].ratio - 1.0) <= 0.001);
        CHECK(r.pass);

        s.event = PolarEvent(2.0, FullSphere{});
        const auto r2 = theorem1_run(m, s);
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            CHECK(r2.rows[i].mu_U == doctest::Approx(std::pow(2.0, -1.5) * r.rows[i].mu_U).epsilon(1e-15));
        }

        s.schedule.exponent = 0.9;
        CHECK_THROWS_AS(theorem1_run(m, s), RegimeViolation);
    }

    TEST_CASE("certain membership gives p_hat = 1")
    {
        const MaxCone mc;
        const RegVarSpec spec(1.5, 2.0);
        const auto sp = make_spectral(mc, preset("point-mass-direction"));
        const Model<MaxCone> m{mc, spec, sp};
        auto s = settings({1}, 1.4, 1.0, 1000);
        s.event = PolarEvent(0.5, FullSphere{});
        const auto row = estimate_event_prob(m, s, 1, [&](double x, double l) { return event_member(mc, x, s.event, l); });
        CHECK(row.p_hat == 1.0);
        CHECK(row.ci_hi == 1.0);
    }

    TEST_CASE("max cone: Monte Carlo intervals cover the exact value")
    {
        const MaxCone mc;
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(mc, preset("point-mass-direction"));
        const Model<MaxCone> m{mc, spec, sp};
        int covered = 0;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) {
            auto s = settings({10}, 1.0, 2.0, 3000, seed);
            const double truth = exact_max_cone_prob(spec, s.event, 10, s.schedule(10.0));
            const auto row = estimate_event_prob(m, s, 10, [&](double x, double l) {
                return event_member(mc, x, s.event, l);
            });
            covered += (row.ci_lo <= truth && truth <= row.ci_hi) ? 1 : 0;
        }
        CHECK(covered >= 93);
    }

    TEST_CASE("rows do not depend on the thread count")
    {
        const ConvexBodiesCone cb(2, BodyMetric::hausdorff);
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(cb, preset("rotated-segment"));
        const Model<ConvexBodiesCone> m{cb, spec, sp};
        auto s = settings({5, 10}, 1.1, 2.0, 4000, 9);
        s.event = PolarEvent(1.0, SupportThreshold{{1.0, 0.0}, 0.5});
        s.sigma_B = 1.0 / 3.0;
        s.use_exact_oracle = false;
        s.threads = 1;
        const auto a = unshifted_rows(m, s);
        s.threads = 3;
        const auto b = unshifted_rows(m, s);
        CHECK(same_rows(a, b));
        s.seed = 10;
        CHECK_FALSE(same_rows(a, unshifted_rows(m, s)));
    }

    TEST_CASE("shifted events")
    {
        const FunctionsCone fc;
        const ConvexBodiesCone cb(2, BodyMetric::lp, 2.0, 360);
        const PolarEvent full(1.0, FullSphere{});
        const PolarEvent corr(1.0, CorrelationThreshold{GridFunction::hat(1.0, 1.0), 0.8});
        const PolarEvent sup(1.0, SupportThreshold{{1.0, 0.0}, 0.3});
        for (std::uint64_t i = 0; i < 100; ++i) {
            CounterRng rng(81, Stream::replicate, 0, i);
            const auto f = GridFunction::hat(rng.uniform(0.3, 3.0), rng.uniform(0.1, 3.0));
            const auto a = GridFunction::hat(rng.uniform(0.3, 3.0), rng.uniform(0.1, 1.0));
            const double lambda = rng.uniform(0.1, 2.0);
            for (const auto& ev : {full, corr}) {
                // Zero shift reduces to plain membership.
                CHECK(shifted_event_member(fc, f, fc.embedded_zero(), ev, lambda) == event_member(fc, f, ev, lambda));
                // Translating both the point and the centre changes nothing.
                CHECK(shifted_event_member(fc, fc.add(f, a), a, ev, lambda) ==
                      shifted_event_member(fc, f, fc.embedded_zero(), ev, lambda));
            }
            const auto p = Polytope(2, {{rng.uniform(-1, 1), rng.uniform(-1, 1), 0}, {rng.uniform(-1, 1), 0.5, 0}});
            const auto q = Polytope::segment(2, {0, 0, 0}, {rng.uniform(-1, 1), rng.uniform(-1, 1), 0});
            for (const auto& ev : {full, sup}) {
                CHECK(shifted_event_member(cb, p, cb.embedded_zero(), ev, lambda) ==
                      event_member(cb, p, ev, lambda));
                CHECK(shifted_event_member(cb, cb.add(p, q), cb.embed(q), ev, lambda) ==
                      shifted_event_member(cb, p, cb.embedded_zero(), ev, lambda));
            }
        }
        // x = A + lambda u with |u| = 2r lies in lambda U + A.
        const auto a = GridFunction::hat(2.0, 1.5);
        const auto u = direction(fc, GridFunction::hat(1.0, 1.0)).times(2.0);
        const double lambda = 3.0;
        CHECK(shifted_event_member(fc, a + u.times(lambda), a, full, lambda));
        CHECK_FALSE(shifted_event_member(fc, a + u.times(0.4 * lambda), a, full, lambda));
    }

    TEST_CASE("centering by Monte Carlo")
    {
        const FunctionsCone fc;
        const RegVarSpec spec(2.5, 1.0);
        const auto sp = make_spectral(fc, {"hat-function", 1.0, 0.0, {}});
        const Model<FunctionsCone> m{fc, spec, sp};
        const auto a = embedded_mean_mc(m, 200000, 1, 1);
        const auto b = embedded_mean_mc(m, 200000, 2, 1);
        CHECK(a.samples == 200000);
        CHECK(a.standard_error > 0.0);
        const double spread = std::sqrt(a.standard_error * a.standard_error + b.standard_error * b.standard_error);
        CHECK(weighted_distance(a.mean, b.mean) <= 3.0 * spread);
        // The norm of E I(xi) is at most E|xi| = alpha / (alpha - 1).
        CHECK(fc.embedded_norm(a.mean) <= spec.mean().value());
        CHECK(fc.embedded_norm(a.mean) > 0.5);
        const auto at3 = fc.embedded_times(3.0, a.mean);
        const auto at6 = fc.embedded_times(6.0, a.mean);
        CHECK(weighted_distance(at6, at3.times(2.0)) < 1e-12);
        CHECK(embedded_mean_mc(m, 30000, 1, 1).mean.values()[50] == embedded_mean_mc(m, 30000, 1, 3).mean.values()[50]);
    }

    TEST_CASE("zero centering and the plain theorem agree on the functions cone")
    {
        const FunctionsCone fc;
        const RegVarSpec spec(2.5, 1.0);
        const auto sp = make_spectral(fc, {"hat-function", 1.0, 0.2, {}});
        const Model<FunctionsCone> m{fc, spec, sp};
        auto s = settings({5, 10}, 1.1, 0.5, 3000, 4);
        s.use_exact_oracle = false;
        s.cond4_replicates = 50;
        const auto t1 = theorem1_run(m, s);
        const auto t2 = theorem2_run_neutral(m, s);
        CHECK(same_rows(t1.rows, t2.rows));
        REQUIRE(t2.cond4.has_value());
        CHECK(t2.cond4->rows.size() == 2);
    }

    TEST_CASE("incompatible cones are refused")
    {
        const UnionCone uc(1);
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(uc, preset("point-mass-direction"));
        const Model<UnionCone> m{uc, spec, sp};
        const auto s = settings({10}, 1.4, 1.0, 100);
        CHECK_THROWS_AS(theorem1_run(m, s), IncompatibleCone);
        CHECK_THROWS_AS(theorem2_run_neutral(m, s), IncompatibleCone);

        const FunctionsCone fc_no_inv({.pointed = true, .sub_invariant = true, .invariant = false});
        const auto fsp = make_spectral(fc_no_inv, preset("hat-function"));
        const Model<FunctionsCone> fm{fc_no_inv, spec, fsp};
        const EmbeddedMean<FunctionsCone> zero{GridFunction(), 0, 0.0};
        CHECK_THROWS_AS(theorem2_run_embedded(fm, settings({10}, 0.8, 1.0, 100), zero, "analytic"),
                        IncompatibleCone);
    }

    TEST_CASE("sum convergence and the single-jump table on the max cone")
    {
        const MaxCone mc;
        const RegVarSpec spec(1.5, 1.0);
        const auto sp = make_spectral(mc, preset("point-mass-direction"));
        const Model<MaxCone> m{mc, spec, sp};
        auto s = settings({100, 1000, 10000}, 1.4, 1.0, 1000, 5);
        s.sumconv_replicates = 1000;
        const auto rep = sumconv_check(m, s);
        REQUIRE(rep.rows.size() == 3);
        for (const auto& row : rep.rows) {
            const double n = static_cast<double>(row.n);
            const double oracle = std::pow(1.0 - std::pow(0.95, 1.0 / n), -1.0 / 1.5) / row.lambda_n;
            CHECK(row.q95_exact == doctest::Approx(oracle).epsilon(1e-9));
            CHECK(row.bound_violations == 0);
            CHECK(row.q95 == doctest::Approx(oracle).epsilon(0.1));
        }
        CHECK(rep.decreasing);
        CHECK(rep.final_below);

        const auto rows = unshifted_rows(m, s);
        const auto jumps = single_big_jump_diag(rows, spec, s.event, true);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double n = static_cast<double>(rows[i].n);
            const double q = spec.tail_prob(rows[i].lambda_n);
            const double p = 1.0 - std::pow(1.0 - q, n);
            CHECK(jumps.rows[i].gap == doctest::Approx(std::abs(p - n * q) / p).epsilon(1e-6));
            CHECK(jumps.rows[i].gap <= jumps.rows[i].bound);
        }
        CHECK(jumps.gap_decreasing);
    }

    TEST_CASE("alpha = 1 reports the truncated-mean term")
    {
        const MaxCone mc;
        const RegVarSpec spec(1.0, 1.0);
        const auto sp = make_spectral(mc, preset("point-mass-direction"));
        const Model<MaxCone> m{mc, spec, sp};
        auto s = settings({10, 100, 1000}, 1.5, 1.0, 100, 5);
        s.sumconv_replicates = 200;
        const auto rep = sumconv_check(m, s);
        for (const auto& row : rep.rows) {
            // n / lambda * log(lambda) for the unit Pareto.
            const double n = static_cast<double>(row.n);
            CHECK(row.truncated_mean_term == doctest::Approx(n / row.lambda_n * std::log(row.lambda_n)).epsilon(1e-9));
        }
        CHECK(rep.extra_decreasing);
    }
}
