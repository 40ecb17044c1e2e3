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

#include "conelab/convex_bodies_cone.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conelab {

namespace {

Point to_point(const std::vector<double>& u, int dim)
{
    if (static_cast<int>(u.size()) != dim) {
        throw DimensionMismatch(static_cast<int>(u.size()), dim);
    }
    Point p{0.0, 0.0, 0.0};
    std::copy(u.begin(), u.end(), p.begin());
    return p;
}

} // namespace

ConvexBodiesCone::ConvexBodiesCone(int dim, BodyMetric metric, double p, std::size_t grid_size, ConeFlags flags)
    : dim_(dim), metric_(metric), p_(p), flags_(flags)
{
    if (dim != 2 && dim != 3) {
        throw std::invalid_argument("convex bodies cone supports m = 2 and m = 3");
    }
    if (metric == BodyMetric::lp && !(p >= 1.0)) {
        throw std::invalid_argument("L_p support metric needs p >= 1");
    }
    if (grid_size == 0) {
        grid_size = DirectionGrid::default_size(dim);
    }
    grid_ = std::make_shared<const DirectionGrid>(DirectionGrid::for_dimension(dim, grid_size));
}

std::string ConvexBodiesCone::name() const
{
    std::string metric = metric_ == BodyMetric::hausdorff ? "hausdorff" : "lp";
    return "convex_bodies(m=" + std::to_string(dim_) + ", " + metric + ")";
}

double ConvexBodiesCone::distance(const Polytope& x, const Polytope& y) const
{
    if (metric_ == BodyMetric::hausdorff) {
        return hausdorff_distance(x, y, grid_.get()).value;
    }
    return lp_support_distance(x, y, p_, *grid_);
}

double ConvexBodiesCone::norm(const Polytope& x) const
{
    if (metric_ == BodyMetric::hausdorff) {
        return x.radius();
    }
    return embedded_norm(embed(x));
}

bool ConvexBodiesCone::direction_in(const DirectionPredicate& b, const Polytope& unit) const
{
    if (is_full_sphere(b)) {
        return true;
    }
    if (const auto* t = std::get_if<SupportThreshold>(&b)) {
        return support_function(unit, to_point(t->u0, dim_)) >= t->c;
    }
    throw PredicateUnsupported("convex bodies cone supports full-sphere and support-threshold predicates only");
}

double ConvexBodiesCone::embedded_norm(const embedded_type& v) const
{
    if (metric_ == BodyMetric::hausdorff) {
        double sup = 0.0;
        for (double h : v) {
            sup = std::max(sup, std::abs(h));
        }
        return sup;
    }
    const auto w = grid_->weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        acc += w[i] * (p_ == 2.0 ? a * a : std::pow(a, p_));
    }
    return p_ == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p_);
}

double ConvexBodiesCone::embedded_value_at(const embedded_type& v, const std::vector<double>& u0) const
{
    const Point u = to_point(u0, dim_);
    const auto dirs = grid_->directions();
    if (dim_ == 2) {
        double theta = std::atan2(u[1], u[0]);
        if (theta < 0.0) {
            theta += 2.0 * std::numbers::pi;
        }
        const double pos = theta / (2.0 * std::numbers::pi) * static_cast<double>(v.size());
        const double base = std::floor(pos);
        const double frac = pos - base;
        const std::size_t i = static_cast<std::size_t>(base) % v.size();
        const std::size_t j = (i + 1) % v.size();
        return v[i] * (1.0 - frac) + v[j] * frac;
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < dirs.size(); ++i) {
        if (dot(dirs[i], u) > dot(dirs[best], u)) {
            best = i;
        }
    }
    return v[best];
}

bool ConvexBodiesCone::embedded_direction_in(const DirectionPredicate& b, const embedded_type& v, double norm) const
{
    if (is_full_sphere(b)) {
        return true;
    }
    if (const auto* t = std::get_if<SupportThreshold>(&b)) {
        return embedded_value_at(v, t->u0) / norm >= t->c;
    }
    throw PredicateUnsupported("embedded convex bodies support full-sphere and support-threshold predicates only");
}

ConvexBodiesCone::embedded_type ConvexBodiesCone::embedded_add(const embedded_type& a, const embedded_type& b) const
{
    embedded_type out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

ConvexBodiesCone::embedded_type ConvexBodiesCone::embedded_sub(const embedded_type& a, const embedded_type& b) const
{
    embedded_type out(a);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
    }
    return out;
}

ConvexBodiesCone::embedded_type ConvexBodiesCone::embedded_times(double c, const embedded_type& v) const
{
    embedded_type out(v);
    for (auto& x : out) {
        x *= c;
    }
    return out;
}

ConvexBodiesCone::embedded_type ConvexBodiesCone::embedded_batch_sum(std::span<const Polytope> xs) const
{
    embedded_type acc = embedded_zero();
    const auto dirs = grid_->directions();
    for (const auto& x : xs) {
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            acc[i] += support_function(x, dirs[i]);
        }
    }
    return acc;
}

} // namespace conelab
