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

#include "conelab/functions_cone.hpp"

#include <stdexcept>

namespace conelab {

std::vector<double> FunctionsCone::default_centering_knots()
{
    std::vector<double> knots;
    for (int i = 0; i <= 500; ++i) {
        knots.push_back(0.02 * i);
    }
    double x = knots.back();
    while (x < 1e5) {
        x *= 1.02;
        knots.push_back(x);
    }
    return knots;
}

FunctionsCone::FunctionsCone(ConeFlags flags, std::vector<double> centering_knots)
    : flags_(flags), centering_knots_(std::move(centering_knots))
{
    if (centering_knots_.size() < 2 || centering_knots_.front() != 0.0) {
        throw std::invalid_argument("centering knots must start at 0 and contain at least two points");
    }
    for (std::size_t i = 1; i < centering_knots_.size(); ++i) {
        if (!(centering_knots_[i] > centering_knots_[i - 1])) {
            throw std::invalid_argument("centering knots must increase strictly");
        }
    }
}

namespace {

double correlation(const GridFunction& v, double v_norm, const CorrelationThreshold& t)
{
    const double t_norm = weighted_norm(t.templ);
    if (!(t_norm > 0.0)) {
        throw std::invalid_argument("correlation template must be nonzero");
    }
    return weighted_inner(v, t.templ) / (v_norm * t_norm);
}

} // namespace

bool FunctionsCone::direction_in(const DirectionPredicate& b, const GridFunction& unit) const
{
    if (is_full_sphere(b)) {
        return true;
    }
    if (const auto* t = std::get_if<CorrelationThreshold>(&b)) {
        return correlation(unit, weighted_norm(unit), *t) >= t->theta;
    }
    throw PredicateUnsupported("functions cone supports full-sphere and correlation-threshold predicates only");
}

bool FunctionsCone::embedded_direction_in(const DirectionPredicate& b, const GridFunction& v, double norm) const
{
    if (is_full_sphere(b)) {
        return true;
    }
    if (const auto* t = std::get_if<CorrelationThreshold>(&b)) {
        // The cone direction of v is its argument rescaling v(x * norm), not v / norm.
        return correlation(v.stretched(1.0 / norm), 1.0, *t) >= t->theta;
    }
    throw PredicateUnsupported("functions cone supports full-sphere and correlation-threshold predicates only");
}

GridFunction FunctionsCone::embedded_batch_sum(std::span<const GridFunction> fs) const
{
    std::vector<double> values(centering_knots_.size(), 0.0);
    GridFunction::accumulate_sum_on(fs, centering_knots_, values);
    // The tabulated mean is truncated at the last centering knot.
    values.back() = 0.0;
    return GridFunction(centering_knots_, std::move(values));
}

} // namespace conelab
