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

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace conelab {

enum class BodyMetric { hausdorff, lp };

/// Convex bodies (as polytopes) under Minkowski addition, metrized by the
/// Hausdorff distance or by the L_p distance of support functions. The
/// support function on the cone's direction grid is an additive embedding,
/// isometric for the L_p metric and grid-approximate for Hausdorff.
class ConvexBodiesCone {
public:
    using element_type = Polytope;
    using embedded_type = std::vector<double>;

    static constexpr ConeFlags default_flags() noexcept
    {
        return {.pointed = true, .sub_invariant = true, .invariant = true, .second_distributive = true};
    }

    /// grid_size 0 selects DirectionGrid::default_size(dim).
    ConvexBodiesCone(int dim, BodyMetric metric, double p = 2.0, std::size_t grid_size = 0,
                     ConeFlags flags = default_flags());

    int dim() const noexcept { return dim_; }
    BodyMetric metric() const noexcept { return metric_; }
    double exponent() const noexcept { return p_; }
    const DirectionGrid& grid() const noexcept { return *grid_; }

    Polytope add(const Polytope& x, const Polytope& y) const { return minkowski_sum(x, y); }
    Polytope sum(std::span<const Polytope> xs) const { return minkowski_sum(xs); }
    Polytope scale(double a, const Polytope& x) const { return x.scaled(a); }
    Polytope neutral() const { return Polytope::point(dim_, {0.0, 0.0, 0.0}); }
    Polytope origin() const { return neutral(); }
    double distance(const Polytope& x, const Polytope& y) const;
    double norm(const Polytope& x) const;
    ConeFlags flags() const noexcept { return flags_; }
    std::string name() const;

    bool direction_in(const DirectionPredicate& b, const Polytope& unit) const;
    std::string describe(const Polytope& x) const { return x.describe(); }

    // Embedding into functions on the direction grid.
    embedded_type embed(const Polytope& x) const { return support_vector(x, *grid_); }
    double embedded_norm(const embedded_type& v) const;
    bool embedded_direction_in(const DirectionPredicate& b, const embedded_type& v, double norm) const;
    embedded_type embedded_add(const embedded_type& a, const embedded_type& b) const;
    embedded_type embedded_sub(const embedded_type& a, const embedded_type& b) const;
    embedded_type embedded_times(double c, const embedded_type& v) const;
    embedded_type embedded_batch_sum(std::span<const Polytope> xs) const;
    embedded_type embedded_zero() const { return embedded_type(grid_->size(), 0.0); }

    /// Support-function value at u0 read off the embedded vector (linear
    /// interpolation in angle for m = 2, nearest direction for m = 3).
    double embedded_value_at(const embedded_type& v, const std::vector<double>& u0) const;

private:
    int dim_;
    BodyMetric metric_;
    double p_;
    std::shared_ptr<const DirectionGrid> grid_;
    ConeFlags flags_;
};

} // namespace conelab
