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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace conelab {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0 || successes > trials) {
        throw std::invalid_argument("wilson interval needs 0 <= successes <= trials, trials > 0");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Interval ci{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (successes == 0) {
        ci.lo = 0.0;
    }
    if (successes == trials) {
        ci.hi = 1.0;
    }
    return ci;
}

double empirical_quantile(std::span<const double> sample, double level)
{
    if (sample.empty()) {
        throw std::invalid_argument("quantile of an empty sample");
    }
    if (!(level > 0.0 && level <= 1.0)) {
        throw std::invalid_argument("quantile level must lie in (0, 1]");
    }
    std::vector<double> v(sample.begin(), sample.end());
    const auto n = v.size();
    auto k = static_cast<std::size_t>(std::ceil(level * static_cast<double>(n)));
    k = std::clamp<std::size_t>(k, 1, n);
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k - 1), v.end());
    return v[k - 1];
}

double mean(std::span<const double> sample)
{
    if (sample.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    double acc = 0.0;
    for (double x : sample) {
        acc += x;
    }
    return acc / static_cast<double>(sample.size());
}

double standard_error(std::span<const double> sample)
{
    if (sample.size() < 2) {
        throw std::invalid_argument("standard error needs at least two observations");
    }
    const double m = mean(sample);
    double ss = 0.0;
    for (double x : sample) {
        ss += (x - m) * (x - m);
    }
    const double n = static_cast<double>(sample.size());
    return std::sqrt(ss / (n - 1.0) / n);
}

} // namespace conelab
