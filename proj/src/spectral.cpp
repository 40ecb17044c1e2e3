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

#include "conelab/samplers.hpp"

#include <cmath>
#include <numbers>

namespace conelab {

std::string predicate_name(const DirectionPredicate& b)
{
    struct Visitor {
        std::string operator()(const FullSphere&) const { return "full"; }
        std::string operator()(const SupportThreshold&) const { return "support_threshold"; }
        std::string operator()(const CoordinateThreshold&) const { return "coordinate_threshold"; }
        std::string operator()(const CorrelationThreshold&) const { return "correlation_threshold"; }
    };
    return std::visit(Visitor{}, b);
}

Point random_unit_vector(int dim, CounterRng& rng)
{
    const double phi = 2.0 * std::numbers::pi * rng.uniform01();
    if (dim == 2) {
        return {std::cos(phi), std::sin(phi), 0.0};
    }
    const double z = rng.uniform(-1.0, 1.0);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
}

namespace {

Point unit_or_e1(const std::vector<double>& v, int dim)
{
    if (v.empty()) {
        return {1.0, 0.0, 0.0};
    }
    if (static_cast<int>(v.size()) != dim) {
        throw ConfigError("spectral direction has " + std::to_string(v.size()) + " coordinates, expected " +
                          std::to_string(dim));
    }
    Point p{0.0, 0.0, 0.0};
    std::copy(v.begin(), v.end(), p.begin());
    const double n = std::sqrt(dot(p, p));
    if (!(n > 0.0)) {
        throw ConfigError("spectral direction must be nonzero");
    }
    return {p[0] / n, p[1] / n, p[2] / n};
}

/// Mass of a deterministic direction: 1 when it satisfies B, else 0.
template <class C>
auto point_mass(const C& cone, element_t<C> eta)
{
    return [cone, eta](const DirectionPredicate& b) -> std::optional<double> {
        return cone.direction_in(b, eta) ? 1.0 : 0.0;
    };
}

std::optional<double> full_only(const DirectionPredicate& b)
{
    if (is_full_sphere(b)) {
        return 1.0;
    }
    return std::nullopt;
}

[[noreturn]] void unknown_preset(const std::string& preset, const std::string& cone)
{
    throw ConfigError("unknown spectral preset '" + preset + "' for cone " + cone);
}

} // namespace

SpectralSampler<double> make_spectral(const MaxCone& cone, const SpectralSpec& spec)
{
    if (spec.preset != "point-mass-direction") {
        unknown_preset(spec.preset, cone.name());
    }
    return {spec.preset, [](CounterRng&) { return 1.0; }, point_mass(cone, 1.0)};
}

SpectralSampler<Polytope> make_spectral(const ConvexBodiesCone& cone, const SpectralSpec& spec)
{
    const int dim = cone.dim();
    if (spec.preset == "rotated-segment") {
        std::function<std::optional<double>(const DirectionPredicate&)> mass = full_only;
        if (cone.metric() == BodyMetric::hausdorff) {
            // h of the segment [0, u] at u0 is max(0, <u, u0>).
            mass = [dim](const DirectionPredicate& b) -> std::optional<double> {
                if (is_full_sphere(b)) {
                    return 1.0;
                }
                const auto* t = std::get_if<SupportThreshold>(&b);
                if (t == nullptr || static_cast<int>(t->u0.size()) != dim) {
                    return std::nullopt;
                }
                double len = 0.0;
                for (double v : t->u0) {
                    len += v * v;
                }
                len = std::sqrt(len);
                if (t->c <= 0.0) {
                    return 1.0;
                }
                if (!(len > 0.0) || t->c / len > 1.0) {
                    return 0.0;
                }
                const double c = t->c / len;
                return dim == 2 ? std::acos(c) / std::numbers::pi : (1.0 - c) / 2.0;
            };
        }
        return {spec.preset,
                [cone, dim](CounterRng& rng) {
                    const Point u = random_unit_vector(dim, rng);
                    return direction(cone, Polytope::segment(dim, {0.0, 0.0, 0.0}, u));
                },
                mass};
    }
    if (spec.preset == "random-triangle") {
        return {spec.preset,
                [cone, dim](CounterRng& rng) {
                    std::vector<Point> pts(3, Point{0.0, 0.0, 0.0});
                    for (auto& p : pts) {
                        for (int k = 0; k < dim; ++k) {
                            p[k] = rng.uniform(-1.0, 1.0);
                        }
                    }
                    return direction(cone, Polytope(dim, std::move(pts)));
                },
                full_only};
    }
    if (spec.preset == "point-mass-direction") {
        const Polytope eta = direction(cone, Polytope::point(dim, unit_or_e1(spec.direction, dim)));
        return {spec.preset, [eta](CounterRng&) { return eta; }, point_mass(cone, eta)};
    }
    unknown_preset(spec.preset, cone.name());
}

SpectralSampler<GridFunction> make_spectral(const FunctionsCone& cone, const SpectralSpec& spec)
{
    if (spec.preset != "hat-function") {
        unknown_preset(spec.preset, cone.name());
    }
    if (!(spec.peak > 0.0) || !(spec.jitter >= 0.0 && spec.jitter < 1.0)) {
        throw ConfigError("hat-function needs peak > 0 and jitter in [0, 1)");
    }
    const double peak = spec.peak;
    const double jitter = spec.jitter;
    if (jitter == 0.0) {
        const GridFunction eta = direction(cone, GridFunction::hat(peak, 1.0));
        return {spec.preset, [eta](CounterRng&) { return eta; }, point_mass(cone, eta)};
    }
    return {spec.preset,
            [cone, peak, jitter](CounterRng& rng) {
                const double p = peak * (1.0 + jitter * rng.uniform(-1.0, 1.0));
                return direction(cone, GridFunction::hat(p, 1.0));
            },
            full_only};
}

SpectralSampler<PointSet> make_spectral(const UnionCone& cone, const SpectralSpec& spec)
{
    if (spec.preset != "point-mass-direction") {
        unknown_preset(spec.preset, cone.name());
    }
    const PointSet eta(cone.dim(), {unit_or_e1(spec.direction, cone.dim())});
    return {spec.preset, [eta](CounterRng&) { return eta; }, point_mass(cone, eta)};
}

namespace {

double random_scalar(CounterRng& rng)
{
    return std::exp(rng.uniform(-3.0, 3.0));
}

std::uint64_t pick(CounterRng& rng, std::uint64_t n)
{
    return static_cast<std::uint64_t>(rng.uniform01() * static_cast<double>(n));
}

} // namespace

AxiomSampler<double> axiom_sampler(const MaxCone&)
{
    AxiomSampler<double> s;
    s.element = [](CounterRng& rng) { return pick(rng, 10) == 0 ? 0.0 : rng.uniform(0.0, 10.0); };
    s.scalar = random_scalar;
    s.fixed = {{1.0, 0.0, 0.0, 1.0, 1.0}, {10.0, 3.0, 1.0, 2.0, 0.5}};
    return s;
}

AxiomSampler<Polytope> axiom_sampler(const ConvexBodiesCone& cone)
{
    const int dim = cone.dim();
    AxiomSampler<Polytope> s;
    s.element = [dim](CounterRng& rng) {
        std::vector<Point> pts(1 + pick(rng, 6), Point{0.0, 0.0, 0.0});
        for (auto& p : pts) {
            for (int k = 0; k < dim; ++k) {
                p[k] = rng.uniform(-2.0, 2.0);
            }
        }
        return Polytope(dim, std::move(pts));
    };
    s.scalar = random_scalar;
    const Point o{0.0, 0.0, 0.0};
    s.fixed = {{Polytope::segment(dim, o, {1.0, 0.0, 0.0}), Polytope::segment(dim, o, {0.0, 1.0, 0.0}),
                Polytope::point(dim, {0.5, 0.5, 0.0}), 2.0, 3.0}};
    return s;
}

AxiomSampler<GridFunction> axiom_sampler(const FunctionsCone&)
{
    AxiomSampler<GridFunction> s;
    s.element = [](CounterRng& rng) {
        if (pick(rng, 10) == 0) {
            return GridFunction();
        }
        const std::size_t k = 2 + pick(rng, 5);
        std::vector<double> knots(k, 0.0);
        std::vector<double> values(k, 0.0);
        for (std::size_t i = 1; i < k; ++i) {
            knots[i] = knots[i - 1] + rng.uniform(0.1, 2.0);
        }
        for (std::size_t i = 0; i + 1 < k; ++i) {
            values[i] = rng.uniform(-1.0, 1.0);
        }
        return GridFunction(std::move(knots), std::move(values));
    };
    s.scalar = random_scalar;
    s.fixed = {{GridFunction::hat(1.0, 1.0), GridFunction(), GridFunction::hat(0.5, 2.0), 2.0, 1.0}};
    return s;
}

AxiomSampler<PointSet> axiom_sampler(const UnionCone& cone)
{
    const int dim = cone.dim();
    AxiomSampler<PointSet> s;
    s.element = [dim](CounterRng& rng) {
        std::vector<Point> pts(1 + pick(rng, 4), Point{0.0, 0.0, 0.0});
        for (auto& p : pts) {
            for (int k = 0; k < dim; ++k) {
                p[k] = rng.uniform(-5.0, 5.0);
            }
        }
        return PointSet(dim, std::move(pts));
    };
    s.scalar = random_scalar;
    s.fixed = {{PointSet(dim, {Point{10.0, 0.0, 0.0}}), PointSet(dim, {Point{0.0, 0.0, 0.0}}),
                PointSet(dim, {Point{1.0, 0.0, 0.0}}), 1.0, 1.0}};
    return s;
}

} // namespace conelab
