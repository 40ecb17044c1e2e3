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
#include "conelab/integrate.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace conelab {

struct ConstantFactor {
    double c = 1.0;
};

/// L(t) = (1 + log(t / t_min))^kappa.
struct LogPowerFactor {
    double kappa = 0.0;
};

using SlowlyVarying = std::variant<ConstantFactor, LogPowerFactor>;

/// Radial law P(zeta > t) = min(1, c (t/t_min)^-alpha L(t)) for t >= t_min,
/// and 1 below t_min.
class RegVarSpec {
public:
    RegVarSpec(double alpha, double t_min, SlowlyVarying factor = ConstantFactor{});

    double alpha() const noexcept { return alpha_; }
    double t_min() const noexcept { return t_min_; }
    const SlowlyVarying& factor() const noexcept { return factor_; }
    bool is_constant() const noexcept { return std::holds_alternative<ConstantFactor>(factor_); }

    double tail_prob(double t) const;
    /// Smallest t with tail_prob(t) <= p, for p in (0, 1].
    double tail_quantile(double p) const;
    double sample_radial(double u) const;
    double a_n(double n) const;
    double gamma_n(double n, double lambda) const;

    /// Integral of tail_prob(t) t^(gamma-1) over (0, T].
    double tail_power_integral(double gamma, double T) const;
    /// E(zeta 1{zeta <= lambda}).
    double truncated_mean(double lambda) const;
    /// E zeta; nullopt when infinite.
    std::optional<double> mean() const;

    std::string describe() const;

private:
    double level_end() const;  // point where the tail leaves 1

    double alpha_;
    double t_min_;
    SlowlyVarying factor_;
};

/// mu(U) = sigma(B) r^-alpha for the polar event U.
double mu_polar(const RegVarSpec& spec, const PolarEvent& event, double sigma_B);

enum class KaramataBranch { lower, upper };

struct KaramataQuery {
    RealFn f;
    double rho = 0.0;
    double beta = 0.0;
    double a = 1.0;
    /// Unset: lower-limit integral when beta >= -(rho+1), tail integral otherwise.
    std::optional<KaramataBranch> branch;
    std::vector<double> breakpoints;
};

KaramataBranch karamata_branch(const KaramataQuery& q);
double karamata_ratio(const KaramataQuery& q, double x);
double karamata_limit(const KaramataQuery& q);

/// gamma * tail_power_integral(gamma, T) / (T^gamma P(zeta > T)); tends to
/// gamma / (gamma - alpha).
double truncated_moment_ratio(const RegVarSpec& spec, double gamma, double T);

struct PowerSchedule {
    double exponent = 1.0;
    double coeff = 1.0;

    double operator()(double n) const;
};

enum class Regime { theorem1, theorem2 };

struct RegimeReport {
    bool valid = true;
    std::string violated;             // first failed condition, empty when valid
    std::vector<std::string> notes;   // informational remarks and warnings
};

RegimeReport check_regime(const RegVarSpec& spec, const PowerSchedule& schedule, Regime regime,
                          std::span<const std::uint64_t> n_grid);

/// Throws RegimeViolation when check_regime fails.
RegimeReport require_regime(const RegVarSpec& spec, const PowerSchedule& schedule, Regime regime,
                            std::span<const std::uint64_t> n_grid);

} // namespace conelab
