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

#include "conelab/errors.hpp"
#include "conelab/grid_function.hpp"

#include <cmath>
#include <concepts>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace conelab {

/// Axioms a cone declares about itself. Theorem runners trust these; the
/// axiom suite checks them.
struct ConeFlags {
    bool pointed = false;
    bool sub_invariant = false;
    bool invariant = false;
    bool second_distributive = false;

    friend bool operator==(const ConeFlags&, const ConeFlags&) = default;
};

// Direction predicates: concrete Borel subsets of the unit sphere.

struct FullSphere {
    friend bool operator==(const FullSphere&, const FullSphere&) = default;
};

/// Convex bodies and point sets: h_x(u0) >= c.
struct SupportThreshold {
    std::vector<double> u0;
    double c = 0.0;
    friend bool operator==(const SupportThreshold&, const SupportThreshold&) = default;
};

/// Max cone: x >= c. The unit sphere there is {1}, so this is full or empty.
struct CoordinateThreshold {
    double c = 0.0;
    friend bool operator==(const CoordinateThreshold&, const CoordinateThreshold&) = default;
};

/// Functions cone: <x, template> / (||x|| ||template||) >= theta in L2(x dx).
struct CorrelationThreshold {
    GridFunction templ;
    double theta = 0.0;
};

using DirectionPredicate =
    std::variant<FullSphere, SupportThreshold, CoordinateThreshold, CorrelationThreshold>;

std::string predicate_name(const DirectionPredicate& b);

inline bool is_full_sphere(const DirectionPredicate& b)
{
    return std::holds_alternative<FullSphere>(b);
}

/// U = {x : ||x|| > r, direction(x) in B}.
class PolarEvent {
public:
    PolarEvent(double r, DirectionPredicate b) : r_(r), b_(std::move(b))
    {
        if (!(r_ > 0.0) || !std::isfinite(r_)) {
            throw ConfigError("polar event radius must be positive and finite");
        }
    }

    double r() const noexcept { return r_; }
    const DirectionPredicate& direction() const noexcept { return b_; }

private:
    double r_;
    DirectionPredicate b_;
};

/// Below this norm an element is treated as the origin.
inline constexpr double kZeroNormThreshold = 1e-12;

template <class C>
concept ConeStructure = requires(const C& c,
                                 const typename C::element_type& x,
                                 double a,
                                 const DirectionPredicate& b) {
    typename C::element_type;
    { c.add(x, x) } -> std::convertible_to<typename C::element_type>;
    { c.scale(a, x) } -> std::convertible_to<typename C::element_type>;
    { c.neutral() } -> std::convertible_to<typename C::element_type>;
    { c.origin() } -> std::convertible_to<typename C::element_type>;
    { c.distance(x, x) } -> std::convertible_to<double>;
    { c.flags() } -> std::convertible_to<ConeFlags>;
    { c.name() } -> std::convertible_to<std::string>;
    { c.direction_in(b, x) } -> std::convertible_to<bool>;
    { c.describe(x) } -> std::convertible_to<std::string>;
};

template <ConeStructure C>
using element_t = typename C::element_type;

/// ||x|| = d(x, origin).
template <ConeStructure C>
double norm(const C& cone, const element_t<C>& x)
{
    if constexpr (requires { { cone.norm(x) } -> std::convertible_to<double>; }) {
        return cone.norm(x);
    } else {
        return cone.distance(x, cone.origin());
    }
}

template <ConeStructure C>
element_t<C> direction(const C& cone, const element_t<C>& x)
{
    const double n = norm(cone, x);
    if (!(n > kZeroNormThreshold)) {
        throw ZeroNorm();
    }
    return cone.scale(1.0 / n, x);
}

/// x in lambda * U, i.e. ||x|| > lambda r and direction(x) in B.
template <ConeStructure C>
bool event_member(const C& cone, const element_t<C>& x, const PolarEvent& event, double lambda)
{
    const double n = norm(cone, x);
    if (!(n > lambda * event.r()) || !(n > kZeroNormThreshold)) {
        return false;
    }
    if (is_full_sphere(event.direction())) {
        return true;
    }
    return cone.direction_in(event.direction(), cone.scale(1.0 / n, x));
}

/// Relative-or-absolute tolerance used for metric equality of cone elements.
inline double scaled_tol(double tol, double magnitude) noexcept
{
    return tol * std::max(1.0, std::abs(magnitude));
}

} // namespace conelab
