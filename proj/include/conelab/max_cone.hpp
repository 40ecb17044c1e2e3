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

#include <cmath>
#include <sstream>
#include <string>

namespace conelab {

/// [0, inf) with x + y = max(x, y), the usual scaling and d(x, y) = |x - y|.
class MaxCone {
public:
    using element_type = double;

    static constexpr ConeFlags default_flags() noexcept
    {
        return {.pointed = true, .sub_invariant = true, .invariant = false, .second_distributive = false};
    }

    explicit MaxCone(ConeFlags flags = default_flags()) : flags_(flags) {}

    double add(double x, double y) const noexcept { return x < y ? y : x; }
    double scale(double a, double x) const noexcept { return a * x; }
    double neutral() const noexcept { return 0.0; }
    double origin() const noexcept { return 0.0; }
    double distance(double x, double y) const noexcept { return std::abs(x - y); }
    double norm(double x) const noexcept { return std::abs(x); }
    ConeFlags flags() const noexcept { return flags_; }
    std::string name() const { return "max"; }

    bool direction_in(const DirectionPredicate& b, double unit) const
    {
        if (is_full_sphere(b)) {
            return true;
        }
        if (const auto* t = std::get_if<CoordinateThreshold>(&b)) {
            return unit >= t->c;
        }
        throw PredicateUnsupported("max cone supports full-sphere and coordinate-threshold predicates only");
    }

    std::string describe(double x) const
    {
        std::ostringstream os;
        os.precision(10);
        os << x;
        return os.str();
    }

private:
    ConeFlags flags_;
};

} // namespace conelab
