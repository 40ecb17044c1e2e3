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

// Extreme points of a finite point set in R^3. Degenerate inputs (a single
// point, collinear or coplanar sets) are detected first and reduced to the
// matching lower-dimensional hull; the full-dimensional case is an
// incremental hull with a relative visibility tolerance.

#include "conelab/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <utility>

namespace conelab {

namespace {

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

Point cross(const Point& a, const Point& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double length(const Point& a) { return std::sqrt(dot(a, a)); }

struct Face {
    std::array<std::size_t, 3> v;
    Point normal;
    double offset;
};

Face make_face(const std::vector<Point>& pts, std::size_t a, std::size_t b, std::size_t c)
{
    Point n = cross(sub(pts[b], pts[a]), sub(pts[c], pts[a]));
    const double len = length(n);
    n = {n[0] / len, n[1] / len, n[2] / len};
    return {{a, b, c}, n, dot(n, pts[a])};
}

double signed_distance(const Face& f, const Point& p) { return dot(f.normal, p) - f.offset; }

bool spans_space(const std::vector<Point>& normals)
{
    constexpr double tol = 1e-9;
    const Point& a = normals.front();
    for (std::size_t i = 1; i < normals.size(); ++i) {
        const Point ab = cross(a, normals[i]);
        if (length(ab) <= tol) {
            continue;
        }
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            if (std::abs(dot(ab, normals[j])) > tol) {
                return true;
            }
        }
    }
    return false;
}

// Monotone chain on in-plane coordinates, returning indices into `pts`.
std::vector<std::size_t> planar_hull_indices(const std::vector<Point>& pts,
                                             const Point& origin,
                                             const Point& e1,
                                             const Point& e2,
                                             double eps)
{
    struct Planar {
        double x;
        double y;
        std::size_t idx;
    };
    std::vector<Planar> q;
    q.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point d = sub(pts[i], origin);
        q.push_back({dot(d, e1), dot(d, e2), i});
    }
    std::sort(q.begin(), q.end(), [](const Planar& a, const Planar& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    auto turn = [](const Planar& a, const Planar& b, const Planar& c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    };
    // Area threshold: collinear within eps relative to the edge length.
    auto left = [&](const Planar& a, const Planar& b, const Planar& c) {
        const double base = std::hypot(c.x - a.x, c.y - a.y);
        return turn(a, b, c) > eps * base;
    };
    std::vector<Planar> hull(2 * q.size());
    std::size_t k = 0;
    for (const auto& p : q) {
        while (k >= 2 && !left(hull[k - 2], hull[k - 1], p)) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        while (k >= lower && !left(hull[k - 2], hull[k - 1], q[i])) {
            --k;
        }
        hull[k++] = q[i];
    }
    hull.resize(k - 1);
    std::vector<std::size_t> out;
    for (const auto& h : hull) {
        out.push_back(h.idx);
    }
    return out;
}

} // namespace

std::vector<Point> convex_hull_3d(std::vector<Point> pts, double rel_tol)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) {
        return pts;
    }
    double extent = 0.0;
    for (const auto& p : pts) {
        extent = std::max({extent, std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
    }
    const double eps = rel_tol * std::max(extent, 1e-300);

    // Affine frame from successively farthest points.
    const std::size_t i0 = 0;
    std::size_t i1 = i0;
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = length(sub(pts[i], pts[i0]));
        if (d > best) {
            best = d;
            i1 = i;
        }
    }
    if (best <= eps) {
        return {pts[i0]};
    }
    const Point axis = sub(pts[i1], pts[i0]);
    const double axis_len = length(axis);
    std::size_t i2 = i0;
    best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = length(cross(axis, sub(pts[i], pts[i0]))) / axis_len;
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (best <= eps) {
        // Collinear: keep the two extreme points along the axis.
        auto proj = [&](const Point& p) { return dot(sub(p, pts[i0]), axis); };
        const auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                                  [&](const Point& a, const Point& b) { return proj(a) < proj(b); });
        return {*lo, *hi};
    }
    Point normal = cross(axis, sub(pts[i2], pts[i0]));
    const double normal_len = length(normal);
    normal = {normal[0] / normal_len, normal[1] / normal_len, normal[2] / normal_len};
    std::size_t i3 = i0;
    best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = std::abs(dot(normal, sub(pts[i], pts[i0])));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (best <= eps) {
        const Point e1{axis[0] / axis_len, axis[1] / axis_len, axis[2] / axis_len};
        const Point e2 = cross(normal, e1);
        std::vector<Point> out;
        for (auto idx : planar_hull_indices(pts, pts[i0], e1, e2, eps)) {
            out.push_back(pts[idx]);
        }
        return out;
    }

    std::vector<Face> faces;
    const std::array<std::size_t, 4> tet{i0, i1, i2, i3};
    const std::array<std::array<int, 4>, 4> layout{{{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {1, 3, 2, 0}}};
    for (const auto& l : layout) {
        Face f = make_face(pts, tet[l[0]], tet[l[1]], tet[l[2]]);
        if (signed_distance(f, pts[tet[l[3]]]) > 0.0) {
            f = make_face(pts, tet[l[0]], tet[l[2]], tet[l[1]]);
        }
        faces.push_back(f);
    }

    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) {
            continue;
        }
        std::vector<bool> visible(faces.size(), false);
        bool any = false;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (signed_distance(faces[f], pts[p]) > eps) {
                visible[f] = true;
                any = true;
            }
        }
        if (!any) {
            continue;
        }
        std::set<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (visible[f]) {
                const auto& v = faces[f].v;
                edges.insert({v[0], v[1]});
                edges.insert({v[1], v[2]});
                edges.insert({v[2], v[0]});
            }
        }
        std::vector<Face> next;
        next.reserve(faces.size() + edges.size());
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (!visible[f]) {
                next.push_back(faces[f]);
            }
        }
        for (const auto& [a, b] : edges) {
            if (!edges.contains({b, a})) {
                next.push_back(make_face(pts, a, b, p));
            }
        }
        faces = std::move(next);
    }

    // A vertex inside an edge or a facet has incident normals of rank < 3.
    std::map<std::size_t, std::vector<Point>> incident;
    for (const auto& f : faces) {
        for (auto idx : f.v) {
            incident[idx].push_back(f.normal);
        }
    }
    std::vector<Point> out;
    out.reserve(incident.size());
    for (const auto& [idx, normals] : incident) {
        if (spans_space(normals)) {
            out.push_back(pts[idx]);
        }
    }
    return out;
}

} // namespace conelab
