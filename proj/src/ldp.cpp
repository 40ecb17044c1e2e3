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

#include "conelab/ldp.hpp"

namespace conelab {

double exact_max_cone_prob(const RegVarSpec& spec, const PolarEvent& event, std::uint64_t n, double lambda)
{
    if (!is_full_sphere(event.direction())) {
        throw PredicateUnsupported("the max-cone closed form needs a full-sphere event");
    }
    const double q = spec.tail_prob(lambda * event.r());
    if (q >= 1.0) {
        return 1.0;
    }
    return -std::expm1(static_cast<double>(n) * std::log1p(-q));
}

namespace {

void fill_common(EstimateRow& row, const RegVarSpec& spec, const TheoremSettings& s)
{
    const double n = static_cast<double>(row.n);
    row.lambda_n = s.schedule(n);
    row.gamma_n = spec.gamma_n(n, row.lambda_n);
    row.gamma_p = row.gamma_n * row.p_hat;
    row.mu_U = mu_polar(spec, s.event, s.sigma_B);
    row.ratio = row.mu_U > 0.0 ? row.gamma_p / row.mu_U : std::numeric_limits<double>::quiet_NaN();
    row.single_jump_ref = n * spec.tail_prob(row.lambda_n * s.event.r()) * s.sigma_B;
}

} // namespace

EstimateRow mc_row(const RegVarSpec& spec, const TheoremSettings& s, std::uint64_t n, std::uint64_t successes)
{
    EstimateRow row;
    row.n = n;
    row.successes = successes;
    row.trials_used = s.trials;
    row.p_hat = static_cast<double>(successes) / static_cast<double>(s.trials);
    const Interval ci = wilson_interval(successes, s.trials);
    row.ci_lo = ci.lo;
    row.ci_hi = ci.hi;
    row.thin = successes < kMinSuccesses;
    fill_common(row, spec, s);
    return row;
}

EstimateRow exact_row(const RegVarSpec& spec, const TheoremSettings& s, std::uint64_t n, double p)
{
    EstimateRow row;
    row.n = n;
    row.p_hat = p;
    row.ci_lo = p;
    row.ci_hi = p;
    row.exact = true;
    fill_common(row, spec, s);
    return row;
}

bool band_verdict(std::span<const EstimateRow> rows, const Band& band)
{
    if (rows.empty()) {
        return false;
    }
    const std::size_t first = rows.size() >= 2 ? rows.size() - 2 : 0;
    for (std::size_t i = first; i < rows.size(); ++i) {
        if (!band.contains(rows[i].ratio)) {
            return false;
        }
    }
    return true;
}

JumpReport single_big_jump_diag(std::span<const EstimateRow> rows, const RegVarSpec& spec, const PolarEvent& event,
                                bool max_cone)
{
    JumpReport report;
    for (const auto& r : rows) {
        JumpRow j;
        j.n = r.n;
        j.p_hat = r.p_hat;
        j.single_jump_ref = r.single_jump_ref;
        j.gap = r.p_hat > 0.0 ? std::abs(r.p_hat - r.single_jump_ref) / r.p_hat
                              : std::numeric_limits<double>::quiet_NaN();
        if (max_cone) {
            j.bound = static_cast<double>(r.n) * spec.tail_prob(r.lambda_n * event.r()) / 2.0;
        }
        report.rows.push_back(j);
    }
    report.gap_decreasing = report.rows.size() >= 2;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        report.gap_decreasing = report.gap_decreasing && report.rows[i].gap < report.rows[i - 1].gap;
    }
    return report;
}

Cond4Report finish_cond4(std::vector<Cond4Row> rows, std::uint64_t replicates)
{
    Cond4Report report;
    report.rows = std::move(rows);
    report.replicates = replicates;
    report.decreasing = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i) {
        report.decreasing = report.decreasing && report.rows[i].mean_ratio < report.rows[i - 1].mean_ratio;
    }
    report.final_below = !report.rows.empty() && report.rows.back().mean_ratio < 0.1;
    return report;
}

} // namespace conelab
