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

#include "conelab/union_cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace conelab {

PointSet::PointSet(int dim, std::vector<Point> points) : dim_(dim), points_(std::move(points))
{
    if (dim < 1 || dim > 3) {
        throw std::invalid_argument("point sets live in R^1, R^2 or R^3");
    }
    if (points_.empty()) {
        throw std::invalid_argument("point set must be nonempty");
    }
    for (const auto& p : points_) {
        for (int i = 0; i < 3; ++i) {
            if (!std::isfinite(p[i]) || (i >= dim && p[i] != 0.0)) {
                throw std::invalid_argument("invalid point coordinates");
            }
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

PointSet PointSet::scaled(double a) const
{
    if (!(a > 0.0)) {
        throw std::invalid_argument("cone scaling requires a positive factor");
    }
    std::vector<Point> v(points_);
    for (auto& p : v) {
        p = {a * p[0], a * p[1], a * p[2]};
    }
    return PointSet(dim_, std::move(v));
}

std::string PointSet::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << '{';
    for (std::size_t i = 0; i < points_.size() && i < 6; ++i) {
        os << (i ? ", " : "");
        if (dim_ == 1) {
            os << points_[i][0];
        } else {
            os << '(' << points_[i][0];
            for (int k = 1; k < dim_; ++k) {
                os << ", " << points_[i][k];
            }
            os << ')';
        }
    }
    if (points_.size() > 6) {
        os << ", ... " << points_.size() << " points";
    }
    os << '}';
    return os.str();
}

PointSet set_union(const PointSet& a, const PointSet& b)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(a.dim(), b.dim());
    }
    std::vector<Point> all(a.points().begin(), a.points().end());
    all.insert(all.end(), b.points().begin(), b.points().end());
    return PointSet(a.dim(), std::move(all));
}

namespace {

double directed(const PointSet& a, const PointSet& b)
{
    double worst = 0.0;
    for (const auto& p : a.points()) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& q : b.points()) {
            const Point d{p[0] - q[0], p[1] - q[1], p[2] - q[2]};
            nearest = std::min(nearest, dot(d, d));
        }
        worst = std::max(worst, nearest);
    }
    return std::sqrt(worst);
}

} // namespace

double hausdorff_distance(const PointSet& a, const PointSet& b)
{
    if (a.dim() != b.dim()) {
        throw DimensionMismatch(a.dim(), b.dim());
    }
    return std::max(directed(a, b), directed(b, a));
}

UnionCone::UnionCone(int dim, ConeFlags flags) : dim_(dim), flags_(flags)
{
    if (dim < 1 || dim > 3) {
        throw std::invalid_argument("union cone supports m = 1, 2, 3");
    }
}

double UnionCone::norm(const PointSet& a) const
{
    double r2 = 0.0;
    for (const auto& p : a.points()) {
        r2 = std::max(r2, dot(p, p));
    }
    return std::sqrt(r2);
}

bool UnionCone::direction_in(const DirectionPredicate& b, const PointSet& unit) const
{
    if (is_full_sphere(b)) {
        return true;
    }
    if (const auto* t = std::get_if<SupportThreshold>(&b)) {
        if (static_cast<int>(t->u0.size()) != dim_) {
            throw DimensionMismatch(static_cast<int>(t->u0.size()), dim_);
        }
        Point u{0.0, 0.0, 0.0};
        std::copy(t->u0.begin(), t->u0.end(), u.begin());
        double h = -std::numeric_limits<double>::infinity();
        for (const auto& p : unit.points()) {
            h = std::max(h, dot(p, u));
        }
        return h >= t->c;
    }
    throw PredicateUnsupported("union cone supports full-sphere and support-threshold predicates only");
}

} // namespace conelab
