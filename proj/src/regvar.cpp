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

#include "conelab/regvar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace conelab {

namespace {

constexpr double kIntegralTol = 1e-12;

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

} // namespace

RegVarSpec::RegVarSpec(double alpha, double t_min, SlowlyVarying factor)
    : alpha_(alpha), t_min_(t_min), factor_(factor)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw ConfigError("tail index alpha must be positive and finite");
    }
    if (!(t_min > 0.0) || !std::isfinite(t_min)) {
        throw ConfigError("t_min must be positive and finite");
    }
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        if (!(c->c > 0.0) || !std::isfinite(c->c)) {
            throw ConfigError("constant slowly varying factor must be positive and finite");
        }
    } else {
        const double kappa = std::get<LogPowerFactor>(factor_).kappa;
        if (!std::isfinite(kappa) || kappa > alpha) {
            throw ConfigError("log-power exponent kappa must be finite and at most alpha");
        }
    }
}

double RegVarSpec::level_end() const
{
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        return t_min_ * std::pow(std::max(1.0, c->c), 1.0 / alpha_);
    }
    return t_min_;
}

double RegVarSpec::tail_prob(double t) const
{
    if (!(t >= t_min_)) {
        return 1.0;
    }
    const double x = t / t_min_;
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        return std::min(1.0, c->c * std::pow(x, -alpha_));
    }
    const double kappa = std::get<LogPowerFactor>(factor_).kappa;
    return std::min(1.0, std::pow(x, -alpha_) * std::pow(1.0 + std::log(x), kappa));
}

double RegVarSpec::tail_quantile(double p) const
{
    if (!(p > 0.0 && p <= 1.0)) {
        throw std::invalid_argument("tail quantile level must lie in (0, 1]");
    }
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        return t_min_ * std::pow(std::max(1.0, c->c / p), 1.0 / alpha_);
    }
    if (p == 1.0) {
        return t_min_;
    }
    // Bisection on s = log(t / t_min), where log tail = -alpha s + kappa log(1 + s).
    const double kappa = std::get<LogPowerFactor>(factor_).kappa;
    const double target = std::log(p);
    auto log_tail = [&](double s) { return -alpha_ * s + kappa * std::log1p(s); };
    double lo = 0.0;
    double hi = 1.0;
    while (log_tail(hi) > target) {
        lo = hi;
        hi *= 2.0;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (log_tail(mid) > target ? lo : hi) = mid;
    }
    double t = t_min_ * std::exp(hi);
    while (tail_prob(t) > p) {
        t = std::nextafter(t, std::numeric_limits<double>::infinity());
    }
    return t;
}

double RegVarSpec::sample_radial(double u) const
{
    if (!(u > 0.0 && u < 1.0)) {
        throw std::invalid_argument("uniform variate must lie in (0, 1)");
    }
    return tail_quantile(1.0 - u);
}

double RegVarSpec::a_n(double n) const
{
    if (!(n >= 1.0)) {
        throw std::invalid_argument("a_n needs n >= 1");
    }
    return tail_quantile(1.0 / n);
}

double RegVarSpec::gamma_n(double n, double lambda) const
{
    if (!(n >= 1.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("gamma_n needs n >= 1 and lambda > 0");
    }
    const double tail = tail_prob(lambda);
    if (!(tail > 0.0)) {
        throw DegenerateTail("P(|xi| > lambda) vanishes at lambda = " + fmt(lambda));
    }
    return 1.0 / (n * tail);
}

double RegVarSpec::tail_power_integral(double gamma, double T) const
{
    if (!(gamma > 0.0) || !(T > 0.0)) {
        throw std::invalid_argument("tail_power_integral needs gamma > 0 and T > 0");
    }
    const double t1 = level_end();
    if (T <= t1) {
        return std::pow(T, gamma) / gamma;
    }
    const double head = std::pow(t1, gamma) / gamma;
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        const double e = gamma - alpha_;
        const double scale = c->c * std::pow(t_min_, alpha_);
        if (e == 0.0) {
            return head + scale * std::log(T / t1);
        }
        return head + scale * (std::pow(T, e) - std::pow(t1, e)) / e;
    }
    return head + integrate_log([&](double t) { return tail_prob(t) * std::pow(t, gamma - 1.0); }, t1, T,
                                kIntegralTol);
}

double RegVarSpec::truncated_mean(double lambda) const
{
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("truncated_mean needs lambda > 0");
    }
    return std::max(0.0, tail_power_integral(1.0, lambda) - lambda * tail_prob(lambda));
}

std::optional<double> RegVarSpec::mean() const
{
    const double t1 = level_end();
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        if (alpha_ <= 1.0) {
            return std::nullopt;
        }
        return t1 + c->c * std::pow(t_min_, alpha_) * std::pow(t1, 1.0 - alpha_) / (alpha_ - 1.0);
    }
    const double kappa = std::get<LogPowerFactor>(factor_).kappa;
    if (alpha_ < 1.0 || (alpha_ == 1.0 && kappa >= -1.0)) {
        return std::nullopt;
    }
    if (alpha_ == 1.0) {
        return t_min_ * (1.0 + 1.0 / (-kappa - 1.0));
    }
    return t_min_ + integrate_tail([&](double t) { return tail_prob(t); }, t_min_, kIntegralTol);
}

std::string RegVarSpec::describe() const
{
    std::ostringstream os;
    os << "alpha=" << alpha_ << ", t_min=" << t_min_ << ", ";
    if (const auto* c = std::get_if<ConstantFactor>(&factor_)) {
        os << "L=constant(" << c->c << ")";
    } else {
        os << "L=log_power(" << std::get<LogPowerFactor>(factor_).kappa << ")";
    }
    return os.str();
}

double mu_polar(const RegVarSpec& spec, const PolarEvent& event, double sigma_B)
{
    if (!(sigma_B >= 0.0 && sigma_B <= 1.0)) {
        throw std::invalid_argument("sigma(B) must lie in [0, 1]");
    }
    return sigma_B * std::pow(event.r(), -spec.alpha());
}

KaramataBranch karamata_branch(const KaramataQuery& q)
{
    if (q.branch) {
        return *q.branch;
    }
    return q.beta >= -(q.rho + 1.0) ? KaramataBranch::lower : KaramataBranch::upper;
}

double karamata_ratio(const KaramataQuery& q, double x)
{
    if (!(q.a > 0.0) || !(x > q.a)) {
        throw std::invalid_argument("karamata_ratio needs 0 < a < x");
    }
    const RealFn integrand = [&](double t) { return std::pow(t, q.beta) * q.f(t); };
    const double numerator = std::pow(x, q.beta + 1.0) * q.f(x);
    if (karamata_branch(q) == KaramataBranch::lower) {
        return numerator / integrate_log(integrand, q.a, x, kIntegralTol, q.breakpoints);
    }
    if (q.beta > -(q.rho + 1.0)) {
        throw IntegralDiverges("t^beta f(t) is not integrable at infinity for beta > -(rho+1)");
    }
    return numerator / integrate_tail(integrand, x, kIntegralTol);
}

double karamata_limit(const KaramataQuery& q)
{
    const double s = q.beta + q.rho + 1.0;
    return karamata_branch(q) == KaramataBranch::lower ? s : -s;
}

double truncated_moment_ratio(const RegVarSpec& spec, double gamma, double T)
{
    if (!(gamma > spec.alpha())) {
        throw std::invalid_argument("truncated moment ratio needs gamma > alpha");
    }
    if (!(T > spec.t_min())) {
        throw std::invalid_argument("truncated moment ratio needs T > t_min");
    }
    return gamma * (spec.tail_power_integral(gamma, T) / std::pow(T, gamma)) / spec.tail_prob(T);
}

double PowerSchedule::operator()(double n) const
{
    if (!(exponent > 0.0) || !(coeff > 0.0)) {
        throw ConfigError("power schedule needs positive exponent and coefficient");
    }
    return coeff * std::pow(n, exponent);
}

RegimeReport check_regime(const RegVarSpec& spec, const PowerSchedule& schedule, Regime regime,
                          std::span<const std::uint64_t> n_grid)
{
    RegimeReport report;
    const double alpha = spec.alpha();
    const double e = schedule.exponent;
    auto fail = [&](std::string what) {
        if (report.valid) {
            report.valid = false;
            report.violated = std::move(what);
        }
    };

    if (regime == Regime::theorem1) {
        const double bound = std::max(1.0, 1.0 / alpha);
        if (!(e > bound)) {
            fail(alpha < 1.0 ? "lambda_n / a_n -> infinity requires exponent > 1/alpha = " + fmt(bound)
                             : "lambda_n / n -> infinity requires exponent > 1");
        }
        if (alpha == 1.0 && report.valid) {
            double previous = std::numeric_limits<double>::infinity();
            for (auto n : n_grid) {
                const double lambda = schedule(static_cast<double>(n));
                const double h = static_cast<double>(n) / lambda * spec.truncated_mean(lambda);
                report.notes.push_back("n=" + std::to_string(n) + ": (n/lambda_n) E(|xi| 1{|xi| <= lambda_n}) = " +
                                       fmt(h));
                if (!(h < previous)) {
                    fail("(n / lambda_n) E(|xi| 1{|xi| <= lambda_n}) -> 0 is not decreasing along the n grid");
                }
                previous = h;
            }
        }
        return report;
    }

    if (alpha < 1.0) {
        fail("centred sums need alpha >= 1");
    }
    const double bound = std::max(1.0 / alpha, 0.5);
    if (!(e > bound)) {
        fail("lambda_n / n^(max(1/alpha, 1/2) + eta) -> infinity requires exponent > " + fmt(bound));
    }
    if (!spec.mean()) {
        fail("E|xi| must be finite");
    } else if (alpha == 1.0) {
        report.notes.push_back("alpha = 1 with finite mean: boundary case, convergence is slow");
    }
    return report;
}

RegimeReport require_regime(const RegVarSpec& spec, const PowerSchedule& schedule, Regime regime,
                            std::span<const std::uint64_t> n_grid)
{
    auto report = check_regime(spec, schedule, regime, n_grid);
    if (!report.valid) {
        throw RegimeViolation(report.violated);
    }
    return report;
}

} // namespace conelab
