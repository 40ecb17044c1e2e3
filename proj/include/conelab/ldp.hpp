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

#pragma once

#include "conelab/cone.hpp"
#include "conelab/max_cone.hpp"
#include "conelab/parallel.hpp"
#include "conelab/regvar.hpp"
#include "conelab/rng.hpp"
#include "conelab/samplers.hpp"
#include "conelab/stats.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace conelab {

struct Band {
    double lo = 0.7;
    double hi = 1.3;
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// One (n, lambda_n) estimate. Column order matches the CSV reports.
struct EstimateRow {
    std::uint64_t n = 0;
    double lambda_n = 0.0;
    double gamma_n = 0.0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double gamma_p = 0.0;
    double mu_U = 0.0;
    double ratio = 0.0;
    double single_jump_ref = 0.0;
    std::uint64_t trials_used = 0;
    bool exact = false;

    std::uint64_t successes = 0;
    bool thin = false;  // fewer than kMinSuccesses hits
};

inline constexpr std::uint64_t kMinSuccesses = 20;

struct TheoremSettings {
    PolarEvent event{1.0, FullSphere{}};
    PowerSchedule schedule;
    std::vector<std::uint64_t> n_grid;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    double sigma_B = 1.0;
    Band band;
    bool use_exact_oracle = true;
    std::uint64_t cond4_replicates = 10000;
    std::uint64_t sumconv_replicates = 10000;
};

struct Cond4Row {
    std::uint64_t n = 0;
    double lambda_n = 0.0;
    double mean_ratio = 0.0;  // mean of d(S_n, A_n) / lambda_n
    double standard_error = 0.0;
};

struct Cond4Report {
    std::vector<Cond4Row> rows;
    std::uint64_t replicates = 0;
    bool decreasing = false;
    bool final_below = false;  // last value < 0.1
    bool pass() const noexcept { return decreasing && final_below; }
};

struct CenteringInfo {
    std::string kind = "zero";
    std::uint64_t samples = 0;
    double mean_norm = 0.0;
    double standard_error = 0.0;
};

struct TheoremResult {
    std::vector<EstimateRow> rows;
    bool pass = false;
    bool thin = false;
    RegimeReport regime;
    std::optional<Cond4Report> cond4;
    CenteringInfo centering;
};

struct SumconvRow {
    std::uint64_t n = 0;
    double lambda_n = 0.0;
    double q95 = 0.0;
    double q95_exact = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t bound_violations = 0;
    double truncated_mean_term = std::numeric_limits<double>::quiet_NaN();  // alpha = 1 only
};

struct SumconvReport {
    std::vector<SumconvRow> rows;
    std::uint64_t replicates = 0;
    bool decreasing = false;
    bool final_below = false;  // last value < 0.05
    bool extra_decreasing = true;
    bool pass() const noexcept { return decreasing && final_below && extra_decreasing; }
};

struct JumpRow {
    std::uint64_t n = 0;
    double p_hat = 0.0;
    double single_jump_ref = 0.0;
    double gap = 0.0;
    double bound = std::numeric_limits<double>::quiet_NaN();
};

struct JumpReport {
    std::vector<JumpRow> rows;
    bool gap_decreasing = false;
};

/// 1 - (1 - q)^n with q = P(zeta > lambda r); full-sphere events only.
double exact_max_cone_prob(const RegVarSpec& spec, const PolarEvent& event, std::uint64_t n, double lambda);

EstimateRow mc_row(const RegVarSpec& spec, const TheoremSettings& s, std::uint64_t n, std::uint64_t successes);
EstimateRow exact_row(const RegVarSpec& spec, const TheoremSettings& s, std::uint64_t n, double p);

/// PASS when the ratio of the last two rows lies in the band.
bool band_verdict(std::span<const EstimateRow> rows, const Band& band);

JumpReport single_big_jump_diag(std::span<const EstimateRow> rows, const RegVarSpec& spec, const PolarEvent& event,
                                bool max_cone);

Cond4Report finish_cond4(std::vector<Cond4Row> rows, std::uint64_t replicates);

template <ConeStructure C>
struct Model {
    const C& cone;
    const RegVarSpec& spec;
    const SpectralSampler<element_t<C>>& spectral;
};

template <ConeStructure C>
element_t<C> sample_element(const Model<C>& m, CounterRng& rng)
{
    const double zeta = m.spec.sample_radial(rng.uniform01());
    const element_t<C> eta = m.spectral.draw(rng);
    const double n = norm(m.cone, eta);
    if (!(std::abs(n - 1.0) <= 1e-6)) {
        throw SpectralNormViolation(n);
    }
    return m.cone.scale(zeta, eta);
}

template <ConeStructure C>
element_t<C> partial_sum(const C& cone, std::span<const element_t<C>> xs)
{
    if (xs.empty()) {
        throw std::invalid_argument("partial sum of an empty list");
    }
    if constexpr (requires { { cone.sum(xs) } -> std::convertible_to<element_t<C>>; }) {
        return cone.sum(xs);
    } else {
        element_t<C> acc = xs.front();
        for (std::size_t i = 1; i < xs.size(); ++i) {
            acc = cone.add(acc, xs[i]);
        }
        return acc;
    }
}

template <class C>
concept Embeddable = ConeStructure<C> && requires(const C& c, const element_t<C>& x,
                                                  const typename C::embedded_type& v, double a,
                                                  const DirectionPredicate& b,
                                                  std::span<const element_t<C>> xs) {
    typename C::embedded_type;
    { c.embed(x) } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_norm(v) } -> std::convertible_to<double>;
    { c.embedded_sub(v, v) } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_add(v, v) } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_times(a, v) } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_batch_sum(xs) } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_zero() } -> std::convertible_to<typename C::embedded_type>;
    { c.embedded_direction_in(b, v, a) } -> std::convertible_to<bool>;
};

template <Embeddable C>
using embedded_t = typename C::embedded_type;

/// Runs `per_replicate(S_n, xs)` on `count` independent replicates of S_n
/// drawn from stream (seed, stream, n, index) and sums the integer results.
template <ConeStructure C, class Fn>
std::uint64_t over_replicates(const Model<C>& m, std::uint64_t n, std::uint64_t count, std::uint64_t seed,
                              Stream stream, unsigned threads, Fn&& per_replicate)
{
    return parallel_count(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<element_t<C>> xs;
        xs.reserve(n);
        std::uint64_t acc = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, stream, n, i);
            xs.clear();
            for (std::uint64_t k = 0; k < n; ++k) {
                xs.push_back(sample_element(m, rng));
            }
            acc += per_replicate(i, partial_sum(m.cone, std::span<const element_t<C>>(xs)),
                                 std::span<const element_t<C>>(xs));
        }
        return acc;
    });
}

/// Monte Carlo row for an arbitrary membership test on S_n.
template <ConeStructure C, class Member>
EstimateRow estimate_event_prob(const Model<C>& m, const TheoremSettings& s, std::uint64_t n, Member&& member)
{
    const double lambda = s.schedule(static_cast<double>(n));
    const std::uint64_t hits =
        over_replicates(m, n, s.trials, s.seed, Stream::replicate, s.threads,
                        [&](std::uint64_t, const element_t<C>& sum, std::span<const element_t<C>>) {
                            return member(sum, lambda) ? std::uint64_t{1} : std::uint64_t{0};
                        });
    return mc_row(m.spec, s, n, hits);
}

/// Unshifted rows: exact for the max cone with a full-sphere event, MC otherwise.
template <ConeStructure C>
std::vector<EstimateRow> unshifted_rows(const Model<C>& m, const TheoremSettings& s)
{
    std::vector<EstimateRow> rows;
    for (auto n : s.n_grid) {
        if constexpr (std::is_same_v<C, MaxCone>) {
            if (s.use_exact_oracle && is_full_sphere(s.event.direction())) {
                const double lambda = s.schedule(static_cast<double>(n));
                rows.push_back(exact_row(m.spec, s, n, exact_max_cone_prob(m.spec, s.event, n, lambda)));
                continue;
            }
        }
        rows.push_back(estimate_event_prob(m, s, n, [&](const element_t<C>& x, double lambda) {
            return event_member(m.cone, x, s.event, lambda);
        }));
    }
    return rows;
}

inline void finish(TheoremResult& r, const Band& band)
{
    r.pass = band_verdict(r.rows, band);
    r.thin = false;
    for (const auto& row : r.rows) {
        r.thin = r.thin || row.thin;
    }
}

template <ConeStructure C>
TheoremResult theorem1_run(const Model<C>& m, const TheoremSettings& s)
{
    if (!m.cone.flags().sub_invariant) {
        throw IncompatibleCone("cone '" + m.cone.name() + "' does not claim a sub-invariant metric");
    }
    TheoremResult r;
    r.regime = require_regime(m.spec, s.schedule, Regime::theorem1, s.n_grid);
    r.rows = unshifted_rows(m, s);
    finish(r, s.band);
    return r;
}

/// d(S_n, A_n) / lambda_n averaged over replicates; `distance` maps S_n to d(S_n, A_n).
template <ConeStructure C, class Distance>
Cond4Report cond4_report(const Model<C>& m, const TheoremSettings& s, Distance&& distance)
{
    std::vector<Cond4Row> rows;
    const std::uint64_t reps = s.cond4_replicates;
    for (auto n : s.n_grid) {
        const double lambda = s.schedule(static_cast<double>(n));
        std::vector<double> values(reps, 0.0);
        over_replicates(m, n, reps, s.seed, Stream::cond4, s.threads,
                        [&](std::uint64_t i, const element_t<C>& sum, std::span<const element_t<C>>) {
                            values[i] = distance(sum, n) / lambda;
                            return std::uint64_t{0};
                        });
        rows.push_back({n, lambda, mean(values), reps > 1 ? standard_error(values) : 0.0});
    }
    return finish_cond4(std::move(rows), reps);
}

template <ConeStructure C>
void require_theorem2_cone(const C& cone)
{
    if (!cone.flags().sub_invariant) {
        throw IncompatibleCone("cone '" + cone.name() + "' does not claim a sub-invariant metric");
    }
}

/// Condition (A): A_n is the neutral element for every n.
template <ConeStructure C>
TheoremResult theorem2_run_neutral(const Model<C>& m, const TheoremSettings& s)
{
    require_theorem2_cone(m.cone);
    TheoremResult r;
    r.regime = require_regime(m.spec, s.schedule, Regime::theorem2, s.n_grid);
    r.rows = unshifted_rows(m, s);
    const auto e = m.cone.neutral();
    r.cond4 = cond4_report(m, s, [&](const element_t<C>& sum, std::uint64_t) { return m.cone.distance(sum, e); });
    finish(r, s.band);
    return r;
}

template <Embeddable C>
struct EmbeddedMean {
    embedded_t<C> mean;
    std::uint64_t samples = 0;  // 0 for a supplied mean
    double standard_error = 0.0;
};

/// Average of `samples` draws of I(xi) from the centering stream.
template <Embeddable C>
EmbeddedMean<C> embedded_mean_mc(const Model<C>& m, std::uint64_t samples, std::uint64_t seed, unsigned threads)
{
    if (samples == 0) {
        throw ConfigError("centering needs at least one sample");
    }
    constexpr std::uint64_t batch = 10000;
    const std::uint64_t batches = (samples + batch - 1) / batch;
    struct Partial {
        embedded_t<C> sum;
        double sum_sq = 0.0;
    };
    auto parts = parallel_map<Partial>(batches, threads, [&](std::uint64_t j) {
        const std::uint64_t begin = j * batch;
        const std::uint64_t end = std::min(samples, begin + batch);
        std::vector<element_t<C>> xs;
        xs.reserve(end - begin);
        double sq = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, Stream::centering, 0, i);
            xs.push_back(sample_element(m, rng));
            const double nx = norm(m.cone, xs.back());
            sq += nx * nx;
        }
        return Partial{m.cone.embedded_batch_sum(std::span<const element_t<C>>(xs)), sq};
    });
    embedded_t<C> total = m.cone.embedded_zero();
    double sum_sq = 0.0;
    for (const auto& p : parts) {
        total = m.cone.embedded_add(total, p.sum);
        sum_sq += p.sum_sq;
    }
    const double M = static_cast<double>(samples);
    EmbeddedMean<C> out{m.cone.embedded_times(1.0 / M, total), samples, 0.0};
    const double mn = m.cone.embedded_norm(out.mean);
    out.standard_error = std::sqrt(std::max(0.0, sum_sq / M - mn * mn) / M);
    return out;
}

/// |I(x) - A| where A is already embedded.
template <Embeddable C>
double embedded_gap(const C& cone, const element_t<C>& x, const embedded_t<C>& a)
{
    if constexpr (requires { { cone.embedded_distance(cone.embed(x), a) } -> std::convertible_to<double>; }) {
        return cone.embedded_distance(cone.embed(x), a);
    } else {
        return cone.embedded_norm(cone.embedded_sub(cone.embed(x), a));
    }
}

/// Membership of x in lambda U + A through the embedded difference I(x) - I(A).
template <Embeddable C>
bool shifted_event_member(const C& cone, const element_t<C>& x, const embedded_t<C>& a, const PolarEvent& event,
                          double lambda)
{
    const double threshold = lambda * event.r();
    if (is_full_sphere(event.direction())) {
        const double g = embedded_gap(cone, x, a);
        return g > threshold && g > kZeroNormThreshold;
    }
    const auto diff = cone.embedded_sub(cone.embed(x), a);
    const double g = cone.embedded_norm(diff);
    if (!(g > threshold) || !(g > kZeroNormThreshold)) {
        return false;
    }
    return cone.embedded_direction_in(event.direction(), diff, g);
}

/// Condition (B): invariant metric, A_n = n E I(xi) in the embedding space.
template <Embeddable C>
TheoremResult theorem2_run_embedded(const Model<C>& m, const TheoremSettings& s, const EmbeddedMean<C>& centering,
                                    const std::string& kind)
{
    require_theorem2_cone(m.cone);
    if (!m.cone.flags().invariant) {
        throw IncompatibleCone("shifted events need an invariant metric; cone '" + m.cone.name() +
                               "' does not claim one");
    }
    TheoremResult r;
    r.regime = require_regime(m.spec, s.schedule, Regime::theorem2, s.n_grid);
    r.centering = {kind, centering.samples, m.cone.embedded_norm(centering.mean), centering.standard_error};
    for (auto n : s.n_grid) {
        const auto a = m.cone.embedded_times(static_cast<double>(n), centering.mean);
        r.rows.push_back(estimate_event_prob(m, s, n, [&](const element_t<C>& x, double lambda) {
            return shifted_event_member(m.cone, x, a, s.event, lambda);
        }));
    }
    r.cond4 = cond4_report(m, s, [&](const element_t<C>& sum, std::uint64_t n) {
        return embedded_gap(m.cone, sum, m.cone.embedded_times(static_cast<double>(n), centering.mean));
    });
    finish(r, s.band);
    return r;
}

/// Check that |S_n| / lambda_n -> 0: 0.95-quantiles over replicates.
template <ConeStructure C>
SumconvReport sumconv_check(const Model<C>& m, const TheoremSettings& s)
{
    SumconvReport report;
    report.replicates = s.sumconv_replicates;
    const bool alpha_one = m.spec.alpha() == 1.0;
    for (auto n : s.n_grid) {
        SumconvRow row;
        row.n = n;
        row.lambda_n = s.schedule(static_cast<double>(n));
        std::vector<double> ratios(s.sumconv_replicates, 0.0);
        row.bound_violations = over_replicates(
            m, n, s.sumconv_replicates, s.seed, Stream::sumconv, s.threads,
            [&](std::uint64_t i, const element_t<C>& sum, std::span<const element_t<C>> xs) {
                const double ns = norm(m.cone, sum);
                double total = 0.0;
                for (const auto& x : xs) {
                    total += norm(m.cone, x);
                }
                ratios[i] = ns / row.lambda_n;
                return ns > total + 1e-9 * (1.0 + total) ? std::uint64_t{1} : std::uint64_t{0};
            });
        row.q95 = empirical_quantile(ratios, 0.95);
        if constexpr (std::is_same_v<C, MaxCone>) {
            // P(max <= t) = (1 - P(zeta > t))^n.
            row.q95_exact = m.spec.tail_quantile(-std::expm1(std::log(0.95) / static_cast<double>(n))) / row.lambda_n;
        }
        if (alpha_one) {
            row.truncated_mean_term = static_cast<double>(n) / row.lambda_n * m.spec.truncated_mean(row.lambda_n);
        }
        report.rows.push_back(row);
    }
    const auto& rows = report.rows;
    report.decreasing = rows.size() < 2 || rows[rows.size() - 1].q95 < rows[rows.size() - 2].q95;
    report.final_below = !rows.empty() && rows.back().q95 < 0.05;
    if (alpha_one) {
        for (std::size_t i = 1; i < rows.size(); ++i) {
            report.extra_decreasing =
                report.extra_decreasing && rows[i].truncated_mean_term < rows[i - 1].truncated_mean_term;
        }
    }
    return report;
}

} // namespace conelab
