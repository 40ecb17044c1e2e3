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

#include "conelab/axioms.hpp"
#include "conelab/convex_bodies_cone.hpp"
#include "conelab/functions_cone.hpp"
#include "conelab/max_cone.hpp"
#include "conelab/parallel.hpp"
#include "conelab/rng.hpp"
#include "conelab/stats.hpp"
#include "conelab/union_cone.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

/// Seeded generator of unit-norm directions eta.
template <class E>
struct SpectralSampler {
    std::string preset;
    std::function<E(CounterRng&)> draw;
    /// sigma(B) in closed form, when the preset admits one.
    std::function<std::optional<double>(const DirectionPredicate&)> analytic_mass;
};

struct SpectralSpec {
    std::string preset;
    double peak = 1.0;             // hat-function
    double jitter = 0.0;           // hat-function, relative spread of the peak
    std::vector<double> direction; // point-mass-direction; empty means e1
};

SpectralSampler<double> make_spectral(const MaxCone& cone, const SpectralSpec& spec);
SpectralSampler<Polytope> make_spectral(const ConvexBodiesCone& cone, const SpectralSpec& spec);
SpectralSampler<GridFunction> make_spectral(const FunctionsCone& cone, const SpectralSpec& spec);
SpectralSampler<PointSet> make_spectral(const UnionCone& cone, const SpectralSpec& spec);

/// Uniform point on the unit circle (dim 2) or sphere (dim 3).
Point random_unit_vector(int dim, CounterRng& rng);

AxiomSampler<double> axiom_sampler(const MaxCone& cone);
AxiomSampler<Polytope> axiom_sampler(const ConvexBodiesCone& cone);
AxiomSampler<GridFunction> axiom_sampler(const FunctionsCone& cone);
AxiomSampler<PointSet> axiom_sampler(const UnionCone& cone);

struct SigmaEstimate {
    double value = 0.0;
    Interval ci;
    std::uint64_t samples = 0;
    bool exact = false;
};

/// Monte Carlo mass of B under the spectral sampler, with a Wilson interval.
template <ConeStructure C>
SigmaEstimate sigma_estimate(const C& cone, const SpectralSampler<element_t<C>>& sampler,
                             const DirectionPredicate& b, std::uint64_t samples, std::uint64_t seed,
                             unsigned threads = 1)
{
    if (samples == 0) {
        throw ConfigError("sigma estimate needs at least one sample");
    }
    if (is_full_sphere(b)) {
        return {1.0, {1.0, 1.0}, samples, true};
    }
    const std::uint64_t hits = parallel_count(samples, threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            CounterRng rng(seed, Stream::spectral_mass, 0, i);
            if (cone.direction_in(b, sampler.draw(rng))) {
                ++local;
            }
        }
        return local;
    });
    return {static_cast<double>(hits) / static_cast<double>(samples), wilson_interval(hits, samples), samples,
            false};
}

} // namespace conelab
