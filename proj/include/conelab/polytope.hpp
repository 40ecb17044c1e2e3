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

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Point in R^m, m in {2, 3}; unused trailing coordinates are zero.
using Point = std::array<double, 3>;

inline double dot(const Point& a, const Point& b) noexcept
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Quasi-uniform directions on S^{m-1} with quadrature weights summing to
/// the sphere's surface measure (2 pi for m = 2, 4 pi for m = 3).
class DirectionGrid {
public:
    /// N equally spaced angles on the circle.
    static DirectionGrid circle(std::size_t n);

    /// Geodesic icosphere: 10 * 4^level + 2 vertices, equal weights.
    static DirectionGrid icosphere(int level);

    /// circle(size) for m = 2; for m = 3 the icosphere with exactly `size`
    /// directions (12, 42, 162, 642, 2562, ...).
    static DirectionGrid for_dimension(int dim, std::size_t size);

    static std::size_t default_size(int dim) noexcept { return dim == 2 ? 360 : 2562; }

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return directions_.size(); }
    std::span<const Point> directions() const noexcept { return directions_; }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Largest angular gap to the nearest grid direction (covering radius).
    double covering_angle() const noexcept { return covering_angle_; }

private:
    int dim_ = 2;
    std::vector<Point> directions_;
    std::vector<double> weights_;
    double covering_angle_ = 0.0;
};

/// Nonempty compact convex polytope in R^m stored by its extreme points.
/// In the plane the vertices are counter-clockwise, starting from the
/// lowest (then leftmost) one.
class Polytope {
public:
    /// Convex hull of the given points.
    Polytope(int dim, std::vector<Point> points);

    static Polytope point(int dim, const Point& p) { return Polytope(dim, {p}); }
    static Polytope segment(int dim, const Point& a, const Point& b) { return Polytope(dim, {a, b}); }

    int dim() const noexcept { return dim_; }
    std::span<const Point> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }

    Polytope scaled(double a) const;

    /// Largest Euclidean norm of a vertex, i.e. the Hausdorff distance to {0}.
    double radius() const noexcept;

    std::string describe() const;

private:
    struct Trusted {};
    Polytope(Trusted, int dim, std::vector<Point> vertices)
        : dim_(dim), vertices_(std::move(vertices))
    {}

    friend Polytope minkowski_sum(std::span<const Polytope> ps);

    int dim_;
    std::vector<Point> vertices_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Minkowski sum of all polytopes; in the plane via a single angular merge of
/// edge vectors.
Polytope minkowski_sum(std::span<const Polytope> ps);

/// h_P(u) = max over vertices of <v, u>.
double support_function(const Polytope& p, const Point& u);

struct DistanceValue {
    double value = 0.0;
    bool exact = true;
};

/// Exact in the plane; in R^3 the supremum of |h_P - h_Q| over `grid` (the
/// default 2562-direction icosphere when null), flagged approximate.
DistanceValue hausdorff_distance(const Polytope& p, const Polytope& q, const DirectionGrid* grid = nullptr);

/// sup over the grid of |h_P(u) - h_Q(u)|.
double grid_sup_distance(const Polytope& p, const Polytope& q, const DirectionGrid& grid);

/// (sum_i w_i |h_P(u_i) - h_Q(u_i)|^p)^{1/p}.
double lp_support_distance(const Polytope& p, const Polytope& q, double exponent, const DirectionGrid& grid);

/// Support function sampled on the grid.
std::vector<double> support_vector(const Polytope& p, const DirectionGrid& grid);

/// Euclidean distance from x to a convex polygon (0 inside).
double point_polygon_distance(const Point& x, const Polytope& polygon);

// Hull primitives.

/// Sign of the orientation determinant of (a, b, c), evaluated exactly.
int orientation_2d(const Point& a, const Point& b, const Point& c);

/// Extreme points in counter-clockwise order, lowest-leftmost first.
std::vector<Point> convex_hull_2d(std::vector<Point> points);

/// Extreme points of a finite set in R^3 (tolerance-based, relative 1e-12).
std::vector<Point> convex_hull_3d(std::vector<Point> points, double rel_tol = 1e-12);

} // namespace conelab
