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

#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Continuous piecewise-linear function on [0, inf) with compact support.
///
/// Knots start at 0 and increase strictly; the function interpolates
/// linearly between knots and vanishes beyond the last knot, whose value
/// must therefore be 0. The zero function is the single knot {0} with value 0.
class GridFunction {
public:
    GridFunction();
    GridFunction(std::vector<double> knots, std::vector<double> values);

    /// Triangle rising from 0 at x=0 to `height` at x=`peak`, back to 0 at 2*peak.
    static GridFunction hat(double peak, double height);

    std::span<const double> knots() const noexcept { return knots_; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return knots_.size(); }
    double support_end() const noexcept { return knots_.back(); }
    bool is_zero() const noexcept;

    double operator()(double x) const;

    /// Argument rescaling x -> f(x / a).
    GridFunction stretched(double a) const;

    /// Ordinary multiplication of values, c * f(x).
    GridFunction times(double c) const;

    friend GridFunction operator+(const GridFunction& f, const GridFunction& g);
    friend GridFunction operator-(const GridFunction& f, const GridFunction& g);

    /// Pointwise sum of many functions by a sorted sweep over slope changes.
    static GridFunction sum(std::span<const GridFunction> fs);

    /// Values of sum(fs) at the given sorted abscissae.
    static void accumulate_sum_on(std::span<const GridFunction> fs,
                                  std::span<const double> at,
                                  std::span<double> out);

    std::string describe() const;

private:
    struct Trusted {};
    GridFunction(Trusted, std::vector<double> knots, std::vector<double> values)
        : knots_(std::move(knots)), values_(std::move(values))
    {}

    std::vector<double> knots_;
    std::vector<double> values_;
};

/// (int_0^inf x f(x)^2 dx)^{1/2}, integrated exactly segment by segment.
double weighted_norm(const GridFunction& f);

/// int_0^inf x f(x) g(x) dx, exact.
double weighted_inner(const GridFunction& f, const GridFunction& g);

/// weighted_norm(f - g) without materializing the difference.
double weighted_distance(const GridFunction& f, const GridFunction& g);

} // namespace conelab
