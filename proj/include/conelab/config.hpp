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
#include "conelab/convex_bodies_cone.hpp"
#include "conelab/ldp.hpp"
#include "conelab/regvar.hpp"
#include "conelab/samplers.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace conelab {

struct ConeConfig {
    std::string id;  // max | convex_bodies | functions | union
    int dim = 2;
    BodyMetric metric = BodyMetric::hausdorff;
    double p = 2.0;
    std::size_t grid = 0;

    std::optional<bool> pointed;
    std::optional<bool> sub_invariant;
    std::optional<bool> invariant;
    std::optional<bool> second_distributive;

    ConeFlags resolve(ConeFlags defaults) const;
};

struct CenteringConfig {
    std::string kind = "zero";  // zero | embedded_mean_analytic | embedded_mean_mc
    std::uint64_t samples = 1000000;
    nlohmann::json payload;     // analytic mean, cone specific
};

struct AxiomSettings {
    std::uint64_t trials = 1000;
    double tol = 1e-9;
};

struct ExperimentConfig {
    ConeConfig cone;
    std::optional<RegVarSpec> spec;
    SpectralSpec spectral;
    std::optional<PolarEvent> event;
    std::optional<double> sigma_B;          // explicit value
    std::uint64_t sigma_estimate = 0;       // > 0: estimate(N)
    PowerSchedule schedule;
    std::vector<std::uint64_t> n_grid;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::optional<Regime> regime;
    CenteringConfig centering;
    bool exact_oracle = true;               // oracle: auto | mc
    Band band;
    AxiomSettings axioms;
    unsigned threads = 1;
    std::uint64_t cond4_replicates = 10000;
    std::uint64_t sumconv_replicates = 10000;
    bool single_jump = true;                // diagnostics also run the estimate rows

    nlohmann::json raw;

    TheoremSettings theorem_settings(double sigma) const;
};

struct KaramataCase {
    std::string label;
    KaramataQuery query;
    std::vector<double> xs;
    double tolerance = 0.005;
};

struct MomentCase {
    std::string label;
    RegVarSpec spec;
    double gamma = 2.0;
    std::vector<double> ts;
    double tolerance = 0.01;
};

struct KaramataConfig {
    std::vector<KaramataCase> queries;
    std::vector<MomentCase> moments;
    nlohmann::json raw;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

ExperimentConfig parse_experiment(const nlohmann::json& j);
KaramataConfig parse_karamata(const nlohmann::json& j);

RegVarSpec parse_spec(const nlohmann::json& j);
DirectionPredicate parse_predicate(const nlohmann::json& j);
GridFunction parse_grid_function(const nlohmann::json& j);

/// FNV-1a over the canonical (sorted-key) serialization.
std::uint64_t config_hash(const nlohmann::json& j);

} // namespace conelab
