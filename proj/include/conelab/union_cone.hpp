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
#include "conelab/polytope.hpp"

#include <span>
#include <string>
#include <vector>

namespace conelab {

/// Finite nonempty point set in R^m (m = 1, 2, 3), stored sorted and
/// without duplicates.
class PointSet {
public:
    PointSet(int dim, std::vector<Point> points);

    int dim() const noexcept { return dim_; }
    std::span<const Point> points() const noexcept { return points_; }
    PointSet scaled(double a) const;
    std::string describe() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    int dim_;
    std::vector<Point> points_;
};

PointSet set_union(const PointSet& a, const PointSet& b);

/// Exact Hausdorff distance between finite sets.
double hausdorff_distance(const PointSet& a, const PointSet& b);

/// Finite sets under union with the Hausdorff metric. Sub-invariance fails
/// here, so the cone only claims pointedness.
class UnionCone {
public:
    using element_type = PointSet;

    static constexpr ConeFlags default_flags() noexcept
    {
        return {.pointed = true, .sub_invariant = false, .invariant = false, .second_distributive = false};
    }

    explicit UnionCone(int dim, ConeFlags flags = default_flags());

    int dim() const noexcept { return dim_; }

    PointSet add(const PointSet& a, const PointSet& b) const { return set_union(a, b); }
    PointSet scale(double a, const PointSet& x) const { return x.scaled(a); }
    PointSet neutral() const { return PointSet(dim_, {Point{0.0, 0.0, 0.0}}); }
    PointSet origin() const { return neutral(); }
    double distance(const PointSet& a, const PointSet& b) const { return hausdorff_distance(a, b); }
    double norm(const PointSet& a) const;
    ConeFlags flags() const noexcept { return flags_; }
    std::string name() const { return "union"; }

    bool direction_in(const DirectionPredicate& b, const PointSet& unit) const;
    std::string describe(const PointSet& x) const { return x.describe(); }

private:
    int dim_;
    ConeFlags flags_;
};

} // namespace conelab
