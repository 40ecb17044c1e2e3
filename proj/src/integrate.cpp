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

#include "conelab/integrate.hpp"

#include "conelab/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace conelab {

namespace {

double piece(const RealFn& f, double s0, double s1, double rel_tol)
{
    auto g = [&](double s) {
        const double t = std::exp(s);
        return f(t) * t;
    };
    double err = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(g, s0, s1, 20, rel_tol, &err);
}

} // namespace

double integrate_log(const RealFn& f, double a, double b, double rel_tol, std::span<const double> breakpoints)
{
    if (!(a > 0.0) || !(b >= a)) {
        throw std::invalid_argument("integrate_log needs 0 < a <= b");
    }
    if (a == b) {
        return 0.0;
    }
    std::vector<double> cuts{a};
    for (double c : breakpoints) {
        if (c > a && c < b) {
            cuts.push_back(c);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(b);
    // Pieces no longer than one decade keep the quadrature well conditioned.
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double s0 = std::log(cuts[i]);
        const double s1 = std::log(cuts[i + 1]);
        const int steps = std::max(1, static_cast<int>(std::ceil((s1 - s0) / std::log(10.0))));
        for (int k = 0; k < steps; ++k) {
            const double lo = s0 + (s1 - s0) * k / steps;
            const double hi = k + 1 == steps ? s1 : s0 + (s1 - s0) * (k + 1) / steps;
            total += piece(f, lo, hi, rel_tol * 1e-2);
        }
    }
    return total;
}

double integrate_tail(const RealFn& f, double a, double rel_tol)
{
    if (!(a > 0.0)) {
        throw std::invalid_argument("integrate_tail needs a > 0");
    }
    const double decade = std::log(10.0);
    const double s_max = std::log(1e300);
    double s = std::log(a);
    double total = 0.0;
    double previous = -1.0;
    int growing = 0;
    for (int k = 0; s < s_max; ++k, s += decade) {
        const double p = piece(f, s, s + decade, rel_tol * 1e-2);
        total += p;
        if (previous > 0.0 && p > 0.0) {
            const double q = p / previous;
            if (q < 1.0) {
                growing = 0;
                const double remainder = p * q / (1.0 - q);
                if (remainder <= 0.1 * rel_tol * std::abs(total)) {
                    return total + remainder;
                }
            } else if (++growing >= 5 && k >= 10) {
                throw IntegralDiverges("tail integral contributions are not decreasing");
            }
        } else if (p == 0.0 && previous == 0.0) {
            return total;
        }
        previous = p;
    }
    throw IntegralDiverges("tail integral did not converge within 1e300");
}

} // namespace conelab
