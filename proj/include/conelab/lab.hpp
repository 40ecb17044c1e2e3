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

// Runtime dispatch from an experiment config to the cone-generic runners.

#include "conelab/axioms.hpp"
#include "conelab/config.hpp"
#include "conelab/ldp.hpp"
#include "conelab/samplers.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace conelab {

using AnyCone = std::variant<MaxCone, ConvexBodiesCone, FunctionsCone, UnionCone>;

AnyCone make_cone(const ConeConfig& c);

AxiomReport run_axioms(const ExperimentConfig& config);

struct SigmaChoice {
    double value = 1.0;
    std::string source;  // config | analytic | estimate
    std::optional<SigmaEstimate> estimate;
};

struct TheoremRun {
    Regime regime = Regime::theorem1;
    std::string cone;
    SigmaChoice sigma;
    TheoremResult result;
};

TheoremRun run_theorem(const ExperimentConfig& config, Regime regime);

struct DiagnosticsRun {
    std::string cone;
    SumconvReport sumconv;
    std::optional<TheoremRun> theorem;
    std::optional<JumpReport> jumps;
    bool pass = false;
};

DiagnosticsRun run_diagnostics(const ExperimentConfig& config);

struct KaramataRow {
    std::string kind;  // ratio | truncated_moment
    std::string label;
    double x = 0.0;
    double value = 0.0;
    double limit = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool checked = false;  // largest x of its query
    bool pass = true;
};

struct KaramataRun {
    std::vector<KaramataRow> rows;
    bool pass = true;
};

KaramataRun run_karamata(const KaramataConfig& config);

} // namespace conelab
