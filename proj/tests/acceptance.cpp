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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "conelab/axioms.hpp"
#include "conelab/config.hpp"
#include "conelab/lab.hpp"
#include "conelab/ldp.hpp"
#include "test_util.hpp"
#include "conelab/regvar.hpp"
#include "conelab/report.hpp"
#include "conelab/samplers.hpp"
#include "conelab/stats.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace conelab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(const std::string& id, const std::string& title, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream time;
    time.precision(3);
    time << secs << " s";
    if (budget_s > 0.0) {
        time << " (budget " << budget_s << " s)";
        if (secs > budget_s) {
            o.pass = false;
            o.detail += "; over time budget";
        }
    }
    if (!o.pass) {
        ++failures;
    }
    std::printf("[%s] %s %s: %s [%s]\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.c_str(),
                time.str().c_str());
    std::fflush(stdout);
}

std::string fmt(double x)
{
    return format_number(x);
}

ExperimentConfig load(const std::string& rel)
{
    return parse_experiment(read_json_file(std::filesystem::path(CONELAB_SOURCE_DIR) / "configs" / rel));
}

Outcome ac1()
{
    std::ostringstream d;
    bool ok = true;

    const MaxCone mc;
    const auto max_rep = axiom_suite(mc, axiom_sampler(mc), 10000, 1e-9, 1);
    for (const char* name : {"metric", "homogeneity", "first_distributivity", "sub_invariance"}) {
        ok = ok && max_rep.find(name)->passed;
    }
    const auto* sd = max_rep.find("second_distributivity");
    ok = ok && !sd->passed && sd->counterexample == "a=1, b=1, x=1: (a+b)x=2, ax+bx=1";
    d << "max: declared ok=" << max_rep.declared_ok() << ", second distributivity '" << sd->counterexample << "'";

    for (auto metric : {BodyMetric::hausdorff, BodyMetric::lp}) {
        const ConvexBodiesCone cb(2, metric, 2.0);
        const auto rep = axiom_suite(cb, axiom_sampler(cb), 1000, 1e-9, 1);
        const bool all = rep.declared_ok() && rep.find("invariance")->declared &&
                         rep.find("second_distributivity")->declared;
        ok = ok && all;
        d << "; convex2/" << (metric == BodyMetric::hausdorff ? "hausdorff" : "lp") << " all declared pass=" << all;
    }

    const UnionCone uc(1);
    const auto urep = axiom_suite(uc, axiom_sampler(uc), 10000, 1e-9, 1);
    const auto* si = urep.find("sub_invariance");
    const bool union_ok = !si->passed && si->counterexample.find("x={10}, h={1}: d(x+h,x)=9 > |h|=1") == 0;
    ok = ok && union_ok;
    d << "; union '" << si->counterexample << "'";
    return {ok, d.str()};
}

Outcome ac2()
{
    std::ostringstream d;
    KaramataQuery q1{[](double t) { return std::pow(t, -1.5); }, -1.5, 2.0, 1.0, KaramataBranch::lower, {}};
    KaramataQuery q2{[](double t) { return std::pow(t, -3.0); }, -3.0, 0.0, 1.0, KaramataBranch::upper, {}};
    const double r1 = karamata_ratio(q1, 1e6);
    const double r2 = karamata_ratio(q2, 1e6);
    const double m = truncated_moment_ratio(RegVarSpec(1.0, 1.0), 2.0, 1e4);
    const double closed = (2e4 - 1) / 1e4;
    const bool ok = std::abs(r1 / 1.5 - 1) <= 0.005 && std::abs(r2 / 2.0 - 1) <= 0.005 &&
                    std::abs(m / 2.0 - 1) <= 0.01 && std::abs(m - closed) <= 1e-9 * closed;
    d << "branch (i) " << fmt(r1) << " vs 1.5; branch (ii) " << fmt(r2) << " vs 2; truncated moment " << fmt(m)
      << " vs (2T-1)/T=" << fmt(closed);
    return {ok, d.str()};
}

Outcome ac3()
{
    const MaxCone mc;
    const RegVarSpec spec(1.5, 1.0);
    const auto sp = make_spectral(mc, preset("point-mass-direction"));
    const Model<MaxCone> m{mc, spec, sp};
    TheoremSettings s;
    s.schedule = {1.4, 1.0};
    s.n_grid = {100, 10000};
    const auto r = theorem1_run(m, s);
    const double e100 = std::abs(r.rows[0].ratio - 1.0);
    const double e1e4 = std::abs(r.rows[1].ratio - 1.0);
    const bool ok = r.rows[0].exact && r.rows[1].exact && e100 <= 0.01 && e1e4 <= 0.001;
    return {ok, "ratio " + fmt(r.rows[0].ratio) + " at n=100, " + fmt(r.rows[1].ratio) + " at n=1e4 (exact)"};
}

Outcome ac4()
{
    auto config = load("convex_theorem1.json");
    const auto run = run_theorem(config, Regime::theorem1);
    std::ostringstream d;
    bool ok = run.sigma.source == "analytic" && std::abs(run.sigma.value - 1.0 / 3.0) < 1e-12;
    d << "sigma(B)=" << fmt(run.sigma.value) << " (" << run.sigma.source << ")";
    for (const auto& row : run.result.rows) {
        const double p = row.single_jump_ref;
        const double slack = 0.3 * row.p_hat;
        const bool sized = p >= 1e-4 && p <= 1e-3;
        const bool band = row.ratio >= 0.7 && row.ratio <= 1.3;
        const bool direct = row.ci_lo <= p && p <= row.ci_hi;
        const bool covered = row.ci_lo - slack <= p && p <= row.ci_hi + slack;
        ok = ok && sized && band && covered && row.trials_used == 1000000;
        d << "; n=" << row.n << " p_hat=" << fmt(row.p_hat) << " CI=[" << fmt(row.ci_lo) << ", " << fmt(row.ci_hi)
          << "] single-jump=" << fmt(p) << " ratio=" << fmt(row.ratio) << " covered(direct)=" << direct
          << " covered(within gap bound)=" << covered;
    }
    return {ok, d.str()};
}

Outcome ac5()
{
    const auto config = load("max_diagnostics.json");
    const MaxCone mc;
    const auto sp = make_spectral(mc, config.spectral);
    const Model<MaxCone> m{mc, *config.spec, sp};
    const auto s = config.theorem_settings(1.0);
    const auto rep = sumconv_check(m, s);
    std::ostringstream d;
    bool ok = rep.replicates == 10000 && rep.rows.size() == 3;
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& row = rep.rows[i];
        const double n = static_cast<double>(row.n);
        const double closed = std::pow(1.0 - std::pow(0.95, 1.0 / n), -1.0 / 1.5) / row.lambda_n;
        ok = ok && std::abs(row.q95_exact / closed - 1.0) < 1e-9 && std::abs(row.q95 / closed - 1.0) <= 0.05;
        if (i > 0) {
            ok = ok && row.q95_exact < rep.rows[i - 1].q95_exact;
        }
        d << (i ? "; " : "") << "n=" << row.n << " exact=" << fmt(closed) << " mc=" << fmt(row.q95);
    }
    ok = ok && rep.rows.back().q95_exact < 0.05;
    return {ok, d.str()};
}

Outcome ac6()
{
    const auto config = load("functions_theorem2.json");
    const auto run = run_theorem(config, Regime::theorem2);
    const auto& r = run.result;
    std::ostringstream d;
    bool ok = r.cond4.has_value() && run.result.centering.samples == 1000000 && r.cond4->rows.size() == 3;
    if (!ok) {
        return {false, "missing condition-(4) report"};
    }
    const auto& c = r.cond4->rows;
    d << "cond4 " << fmt(c[0].mean_ratio) << ", " << fmt(c[1].mean_ratio) << ", " << fmt(c[2].mean_ratio);
    for (std::size_t i = 1; i < c.size(); ++i) {
        const double step = c[i].mean_ratio / c[i - 1].mean_ratio;
        const double expected = std::pow(static_cast<double>(c[i].n) / static_cast<double>(c[i - 1].n), -0.25);
        const bool shrink = step <= 0.87 * 1.1;
        const bool rate = std::abs(step / expected - 1.0) <= 0.1;
        ok = ok && shrink && rate;
        d << "; step " << fmt(step) << " vs n^-0.25 rate " << fmt(expected);
    }
    const auto& last = r.rows.back();
    ok = ok && last.ratio >= 0.7 && last.ratio <= 1.3 && last.p_hat >= 1e-4;
    d << "; final ratio " << fmt(last.ratio) << " with p_hat " << fmt(last.p_hat);
    return {ok, d.str()};
}

Outcome ac7()
{
    const double p = 1e-3;
    const std::uint64_t trials = 1000000;
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        std::uint64_t hits = 0;
        for (std::uint64_t i = 0; i < trials; ++i) {
            CounterRng rng(seed, Stream::calibration, 0, i);
            hits += rng.uniform01() < p ? 1 : 0;
        }
        const auto ci = wilson_interval(hits, trials);
        covered += (ci.lo <= p && p <= ci.hi) ? 1 : 0;
    }
    return {covered >= 93, std::to_string(covered) + "/100 intervals cover p=1e-3"};
}

Outcome ac8()
{
    std::ostringstream d;
    bool ok = true;
    auto check = [&](ExperimentConfig config, Regime regime, const std::string& label) {
        config.threads = 1;
        const auto a = estimate_csv(run_theorem(config, regime).result.rows);
        config.threads = 8;
        const auto b = estimate_csv(run_theorem(config, regime).result.rows);
        ok = ok && a == b && !a.empty();
        d << (d.tellp() ? "; " : "") << label << (a == b ? " identical" : " DIFFERENT") << " (" << a.size()
          << " bytes)";
    };
    check(load("convex_theorem1_quick.json"), Regime::theorem1, "convex theorem1");
    auto f = load("functions_theorem2.json");
    f.trials = 20000;
    f.centering.samples = 50000;
    f.cond4_replicates = 200;
    check(f, Regime::theorem2, "functions theorem2");
    return {ok, "1 vs 8 workers: " + d.str()};
}

} // namespace

int main()
{
    run("AC1", "axiom suite", 10, ac1);
    run("AC2", "Karamata checker", 5, ac2);
    run("AC3", "max cone, exact oracle", 1, ac3);
    run("AC4", "convex bodies, Monte Carlo", 600, ac4);
    run("AC5", "sum convergence quantiles", 0, ac5);
    run("AC6", "functions cone, centred", 600, ac6);
    run("AC7", "Monte Carlo calibration", 0, ac7);
    run("AC8", "determinism across workers", 0, ac8);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
