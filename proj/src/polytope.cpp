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

#include "conelab/polytope.hpp"
#include "conelab/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace conelab {

namespace {

const DirectionGrid& default_sphere_grid()
{
    static const DirectionGrid grid = DirectionGrid::icosphere(4);
    return grid;
}

bool lowest_leftmost(const Point& a, const Point& b)
{
    return a[1] < b[1] || (a[1] == b[1] && a[0] < b[0]);
}

double segment_distance(const Point& x, const Point& a, const Point& b)
{
    const Point ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const Point ax{x[0] - a[0], x[1] - a[1], x[2] - a[2]};
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(ax, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Point d{ax[0] - t * ab[0], ax[1] - t * ab[1], ax[2] - t * ab[2]};
    return std::sqrt(dot(d, d));
}

void check_same_dim(const Polytope& p, const Polytope& q)
{
    if (p.dim() != q.dim()) {
        throw DimensionMismatch(p.dim(), q.dim());
    }
}

} // namespace

int orientation_2d(const Point& a, const Point& b, const Point& c)
{
    const double left = (b[0] - a[0]) * (c[1] - a[1]);
    const double right = (b[1] - a[1]) * (c[0] - a[0]);
    const double det = left - right;
    const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
    if (det > bound) {
        return 1;
    }
    if (-det > bound) {
        return -1;
    }
    using boost::multiprecision::cpp_rational;
    const cpp_rational ax(a[0]), ay(a[1]), bx(b[0]), by(b[1]), cx(c[0]), cy(c[1]);
    const cpp_rational exact = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return exact > 0 ? 1 : (exact < 0 ? -1 : 0);
}

std::vector<Point> convex_hull_2d(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) {
        std::sort(pts.begin(), pts.end(), lowest_leftmost);
        return pts;
    }
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orientation_2d(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && orientation_2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            --k;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    const auto start = std::min_element(hull.begin(), hull.end(), lowest_leftmost);
    std::rotate(hull.begin(), start, hull.end());
    return hull;
}

Polytope::Polytope(int dim, std::vector<Point> points) : dim_(dim)
{
    if (dim != 2 && dim != 3) {
        throw std::invalid_argument("polytopes are supported in R^2 and R^3 only");
    }
    if (points.empty()) {
        throw std::invalid_argument("polytope needs at least one point");
    }
    for (auto& p : points) {
        if (!std::isfinite(p[0]) || !std::isfinite(p[1]) || !std::isfinite(p[2])) {
            throw std::invalid_argument("polytope coordinates must be finite");
        }
        if (dim == 2 && p[2] != 0.0) {
            throw std::invalid_argument("planar polytope has a nonzero third coordinate");
        }
    }
    vertices_ = dim == 2 ? convex_hull_2d(std::move(points)) : convex_hull_3d(std::move(points));
}

Polytope Polytope::scaled(double a) const
{
    if (!(a > 0.0)) {
        throw std::invalid_argument("cone scaling requires a positive factor");
    }
    std::vector<Point> v(vertices_);
    for (auto& p : v) {
        p = {a * p[0], a * p[1], a * p[2]};
    }
    return Polytope(Trusted{}, dim_, std::move(v));
}

double Polytope::radius() const noexcept
{
    double r2 = 0.0;
    for (const auto& v : vertices_) {
        r2 = std::max(r2, dot(v, v));
    }
    return std::sqrt(r2);
}

std::string Polytope::describe() const
{
    std::ostringstream os;
    os.precision(6);
    os << "conv{";
    const std::size_t shown = std::min<std::size_t>(vertices_.size(), 6);
    for (std::size_t i = 0; i < shown; ++i) {
        os << (i ? ", " : "") << '(' << vertices_[i][0] << ", " << vertices_[i][1];
        if (dim_ == 3) {
            os << ", " << vertices_[i][2];
        }
        os << ')';
    }
    if (shown < vertices_.size()) {
        os << ", ... " << vertices_.size() << " vertices";
    }
    os << '}';
    return os.str();
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    check_same_dim(p, q);
    const Polytope both[] = {p, q};
    return minkowski_sum(std::span<const Polytope>(both));
}

Polytope minkowski_sum(std::span<const Polytope> ps)
{
    if (ps.empty()) {
        throw std::invalid_argument("minkowski_sum of an empty list");
    }
    const int dim = ps.front().dim();
    for (const auto& p : ps) {
        if (p.dim() != dim) {
            throw DimensionMismatch(dim, p.dim());
        }
    }
    if (ps.size() == 1) {
        return ps.front();
    }
    if (dim == 3) {
        std::vector<Point> acc(ps.front().vertices().begin(), ps.front().vertices().end());
        for (std::size_t i = 1; i < ps.size(); ++i) {
            std::vector<Point> sums;
            sums.reserve(acc.size() * ps[i].size());
            for (const auto& a : acc) {
                for (const auto& b : ps[i].vertices()) {
                    sums.push_back({a[0] + b[0], a[1] + b[1], a[2] + b[2]});
                }
            }
            acc = convex_hull_3d(std::move(sums));
        }
        return Polytope(Polytope::Trusted{}, 3, std::move(acc));
    }

    // Planar case: walk the edge vectors of all summands in angular order,
    // starting from the sum of their lowest-leftmost vertices.
    struct Edge {
        double angle;
        double dx;
        double dy;
    };
    std::vector<Edge> edges;
    Point cursor{0.0, 0.0, 0.0};
    for (const auto& p : ps) {
        const auto v = p.vertices();
        cursor[0] += v[0][0];
        cursor[1] += v[0][1];
        if (v.size() < 2) {
            continue;
        }
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& a = v[i];
            const Point& b = v[(i + 1) % v.size()];
            const double dx = b[0] - a[0];
            const double dy = b[1] - a[1];
            double angle = std::atan2(dy, dx);
            if (angle < 0.0) {
                angle += 2.0 * std::numbers::pi;
            }
            edges.push_back({angle, dx, dy});
        }
    }
    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& a, const Edge& b) { return a.angle < b.angle; });
    std::vector<Point> walk;
    walk.reserve(edges.size() + 1);
    walk.push_back(cursor);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        cursor[0] += edges[i].dx;
        cursor[1] += edges[i].dy;
        walk.push_back(cursor);
    }
    return Polytope(Polytope::Trusted{}, 2, convex_hull_2d(std::move(walk)));
}

double support_function(const Polytope& p, const Point& u)
{
    double h = -std::numeric_limits<double>::infinity();
    for (const auto& v : p.vertices()) {
        h = std::max(h, dot(v, u));
    }
    return h;
}

double point_polygon_distance(const Point& x, const Polytope& polygon)
{
    const auto v = polygon.vertices();
    if (v.size() == 1) {
        const Point d{x[0] - v[0][0], x[1] - v[0][1], x[2] - v[0][2]};
        return std::sqrt(dot(d, d));
    }
    if (v.size() == 2) {
        return segment_distance(x, v[0], v[1]);
    }
    bool inside = true;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double cross = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
        if (cross < 0.0) {
            inside = false;
        }
        best = std::min(best, segment_distance(x, a, b));
    }
    return inside ? 0.0 : best;
}

double grid_sup_distance(const Polytope& p, const Polytope& q, const DirectionGrid& grid)
{
    check_same_dim(p, q);
    double sup = 0.0;
    for (const auto& u : grid.directions()) {
        sup = std::max(sup, std::abs(support_function(p, u) - support_function(q, u)));
    }
    return sup;
}

DistanceValue hausdorff_distance(const Polytope& p, const Polytope& q, const DirectionGrid* grid)
{
    check_same_dim(p, q);
    if (p.dim() == 3) {
        return {grid_sup_distance(p, q, grid ? *grid : default_sphere_grid()), false};
    }
    double d = 0.0;
    for (const auto& v : p.vertices()) {
        d = std::max(d, point_polygon_distance(v, q));
    }
    for (const auto& v : q.vertices()) {
        d = std::max(d, point_polygon_distance(v, p));
    }
    return {d, true};
}

double lp_support_distance(const Polytope& p, const Polytope& q, double exponent, const DirectionGrid& grid)
{
    check_same_dim(p, q);
    if (!(exponent >= 1.0)) {
        throw std::invalid_argument("L_p support distance needs p >= 1");
    }
    if (grid.dim() != p.dim()) {
        throw DimensionMismatch(grid.dim(), p.dim());
    }
    const auto dirs = grid.directions();
    const auto w = grid.weights();
    double acc = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const double diff = std::abs(support_function(p, dirs[i]) - support_function(q, dirs[i]));
        acc += w[i] * (exponent == 2.0 ? diff * diff : std::pow(diff, exponent));
    }
    return exponent == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / exponent);
}

std::vector<double> support_vector(const Polytope& p, const DirectionGrid& grid)
{
    if (grid.dim() != p.dim()) {
        throw DimensionMismatch(grid.dim(), p.dim());
    }
    std::vector<double> h;
    h.reserve(grid.size());
    for (const auto& u : grid.directions()) {
        h.push_back(support_function(p, u));
    }
    return h;
}

} // namespace conelab
