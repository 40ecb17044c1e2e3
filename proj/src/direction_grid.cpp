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

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace conelab {

namespace {

Point normalized(const Point& p)
{
    const double n = std::sqrt(dot(p, p));
    return {p[0] / n, p[1] / n, p[2] / n};
}

} // namespace

DirectionGrid DirectionGrid::circle(std::size_t n)
{
    if (n < 3) {
        throw std::invalid_argument("circle grid needs at least 3 directions");
    }
    DirectionGrid g;
    g.dim_ = 2;
    g.directions_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        g.directions_.push_back({std::cos(theta), std::sin(theta), 0.0});
    }
    g.weights_.assign(n, 2.0 * std::numbers::pi / static_cast<double>(n));
    g.covering_angle_ = std::numbers::pi / static_cast<double>(n);
    return g;
}

DirectionGrid DirectionGrid::icosphere(int level)
{
    if (level < 0 || level > 7) {
        throw std::invalid_argument("icosphere level must be in [0, 7]");
    }
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point> v = {
        {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0},
        {0, -1, phi}, {0, 1, phi}, {0, -1, -phi}, {0, 1, -phi},
        {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1},
    };
    for (auto& p : v) {
        p = normalized(p);
    }
    using Face = std::array<std::size_t, 3>;
    std::vector<Face> faces = {
        {0, 11, 5}, {0, 5, 1}, {0, 1, 7}, {0, 7, 10}, {0, 10, 11},
        {1, 5, 9}, {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
        {3, 9, 4}, {3, 4, 2}, {3, 2, 6}, {3, 6, 8}, {3, 8, 9},
        {4, 9, 5}, {2, 4, 11}, {6, 2, 10}, {8, 6, 7}, {9, 8, 1},
    };
    for (int l = 0; l < level; ++l) {
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> midpoint;
        auto mid = [&](std::size_t a, std::size_t b) {
            const auto key = std::minmax(a, b);
            const auto it = midpoint.find(key);
            if (it != midpoint.end()) {
                return it->second;
            }
            const Point m{v[a][0] + v[b][0], v[a][1] + v[b][1], v[a][2] + v[b][2]};
            v.push_back(normalized(m));
            midpoint.emplace(key, v.size() - 1);
            return v.size() - 1;
        };
        std::vector<Face> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const std::size_t ab = mid(f[0], f[1]);
            const std::size_t bc = mid(f[1], f[2]);
            const std::size_t ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }
    DirectionGrid g;
    g.dim_ = 3;
    g.directions_ = std::move(v);
    g.weights_.assign(g.directions_.size(), 4.0 * std::numbers::pi / static_cast<double>(g.directions_.size()));
    double cover = 0.0;
    for (const auto& f : faces) {
        const Point& a = g.directions_[f[0]];
        const Point& b = g.directions_[f[1]];
        const Point& c = g.directions_[f[2]];
        const Point centre = normalized({a[0] + b[0] + c[0], a[1] + b[1] + c[1], a[2] + b[2] + c[2]});
        for (const Point* p : {&a, &b, &c}) {
            cover = std::max(cover, std::acos(std::clamp(dot(centre, *p), -1.0, 1.0)));
        }
    }
    g.covering_angle_ = cover;
    return g;
}

DirectionGrid DirectionGrid::for_dimension(int dim, std::size_t size)
{
    if (dim == 2) {
        return circle(size);
    }
    if (dim == 3) {
        std::size_t count = 12;
        for (int level = 0; level <= 7; ++level) {
            if (count == size) {
                return icosphere(level);
            }
            count = 10 * ((count - 2) / 10) * 4 + 2;
        }
        throw std::invalid_argument("sphere grid size must be 10 * 4^k + 2");
    }
    throw std::invalid_argument("direction grids exist for m = 2 and m = 3 only");
}

} // namespace conelab
