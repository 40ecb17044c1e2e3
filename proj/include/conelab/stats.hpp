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

#include <cstdint>
#include <span>

namespace conelab {

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
    bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

/// Empirical quantile by the inverted-CDF rule: the ceil(level*N)-th order
/// statistic. Sorts a copy.
double empirical_quantile(std::span<const double> sample, double level);

double mean(std::span<const double> sample);

/// Standard error of the sample mean (n-1 denominator).
double standard_error(std::span<const double> sample);

} // namespace conelab
