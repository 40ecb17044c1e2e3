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
#include "conelab/grid_function.hpp"

#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Functions with argument rescaling: (a . f)(x) = f(x / a), pointwise
/// addition and d(f, g)^2 = int x (f - g)^2 dx. The identity map into
/// L2(R+, x dx) is an additive isometry.
class FunctionsCone {
public:
    using element_type = GridFunction;
    using embedded_type = GridFunction;

    static constexpr ConeFlags default_flags() noexcept
    {
        return {.pointed = true, .sub_invariant = true, .invariant = true, .second_distributive = false};
    }

    /// Knots on which Monte Carlo means are tabulated: step 0.02 up to 10,
    /// then geometric with ratio 1.02 up to 1e5.
    static std::vector<double> default_centering_knots();

    explicit FunctionsCone(ConeFlags flags = default_flags(),
                           std::vector<double> centering_knots = default_centering_knots());

    const std::vector<double>& centering_knots() const noexcept { return centering_knots_; }

    GridFunction add(const GridFunction& f, const GridFunction& g) const { return f + g; }
    GridFunction sum(std::span<const GridFunction> fs) const { return GridFunction::sum(fs); }
    GridFunction scale(double a, const GridFunction& f) const { return f.stretched(a); }
    GridFunction neutral() const { return GridFunction(); }
    GridFunction origin() const { return GridFunction(); }
    double distance(const GridFunction& f, const GridFunction& g) const { return weighted_distance(f, g); }
    double norm(const GridFunction& f) const { return weighted_norm(f); }
    ConeFlags flags() const noexcept { return flags_; }
    std::string name() const { return "functions"; }

    bool direction_in(const DirectionPredicate& b, const GridFunction& unit) const;
    std::string describe(const GridFunction& f) const { return f.describe(); }

    embedded_type embed(const GridFunction& f) const { return f; }
    double embedded_norm(const GridFunction& v) const { return weighted_norm(v); }
    bool embedded_direction_in(const DirectionPredicate& b, const GridFunction& v, double norm) const;
    double embedded_distance(const GridFunction& a, const GridFunction& b) const { return weighted_distance(a, b); }
    GridFunction embedded_add(const GridFunction& a, const GridFunction& b) const { return a + b; }
    GridFunction embedded_sub(const GridFunction& a, const GridFunction& b) const { return a - b; }
    GridFunction embedded_times(double c, const GridFunction& v) const { return v.times(c); }
    GridFunction embedded_zero() const { return GridFunction(); }

    /// Sum of the given functions, tabulated on the centering knots.
    GridFunction embedded_batch_sum(std::span<const GridFunction> fs) const;

private:
    ConeFlags flags_;
    std::vector<double> centering_knots_;
};

} // namespace conelab
