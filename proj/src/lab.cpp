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

#include "conelab/lab.hpp"

#include <stdexcept>

namespace conelab {

AnyCone make_cone(const ConeConfig& c)
{
    try {
        if (c.id == "max") {
            return MaxCone(c.resolve(MaxCone::default_flags()));
        }
        if (c.id == "convex_bodies") {
            return ConvexBodiesCone(c.dim, c.metric, c.p, c.grid, c.resolve(ConvexBodiesCone::default_flags()));
        }
        if (c.id == "functions") {
            return FunctionsCone(c.resolve(FunctionsCone::default_flags()));
        }
        if (c.id == "union") {
            return UnionCone(c.dim, c.resolve(UnionCone::default_flags()));
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid cone parameters: ") + e.what());
    }
    throw ConfigError("unknown cone id '" + c.id + "'");
}

AxiomReport run_axioms(const ExperimentConfig& config)
{
    if (config.axioms.trials == 0) {
        throw ConfigError("axioms.trials must be positive");
    }
    return std::visit(
        [&](const auto& cone) {
            return axiom_suite(cone, axiom_sampler(cone), config.axioms.trials, config.axioms.tol, config.seed);
        },
        make_cone(config.cone));
}

namespace {

const RegVarSpec& need_spec(const ExperimentConfig& config)
{
    if (!config.spec) {
        throw ConfigError("missing 'spec'");
    }
    if (config.spectral.preset.empty()) {
        throw ConfigError("missing 'spec.spectral'");
    }
    return *config.spec;
}

template <ConeStructure C>
SigmaChoice choose_sigma(const C& cone, const SpectralSampler<element_t<C>>& sampler, const ExperimentConfig& config)
{
    const auto& b = config.event->direction();
    if (config.sigma_B) {
        return {*config.sigma_B, "config", std::nullopt};
    }
    if (config.sigma_estimate > 0) {
        auto est = sigma_estimate(cone, sampler, b, config.sigma_estimate, config.seed, config.threads);
        return {est.value, "estimate", est};
    }
    if (auto mass = sampler.analytic_mass(b)) {
        return {*mass, "analytic", std::nullopt};
    }
    throw ConfigError("sigma(B) has no closed form for preset '" + sampler.preset + "' and predicate '" +
                      predicate_name(b) + "'; set sigma_B to a number or 'estimate(N)'");
}

std::vector<double> analytic_mean(const ConvexBodiesCone& cone, const nlohmann::json& payload)
{
    if (payload.is_object() && payload.contains("constant") && payload["constant"].is_number()) {
        return std::vector<double>(cone.grid().size(), payload["constant"].get<double>());
    }
    if (payload.is_object() && payload.contains("vector") && payload["vector"].is_array()) {
        std::vector<double> v;
        for (const auto& x : payload["vector"]) {
            if (!x.is_number()) {
                throw ConfigError("centering.mean.vector must hold numbers");
            }
            v.push_back(x.get<double>());
        }
        if (v.size() != cone.grid().size()) {
            throw ConfigError("centering.mean.vector has " + std::to_string(v.size()) + " entries, the grid has " +
                              std::to_string(cone.grid().size()));
        }
        return v;
    }
    throw ConfigError("centering.mean for convex bodies must be {\"vector\": [...]} or {\"constant\": c}");
}

GridFunction analytic_mean(const FunctionsCone&, const nlohmann::json& payload)
{
    return parse_grid_function(payload);
}

} // namespace

TheoremRun run_theorem(const ExperimentConfig& config, Regime regime)
{
    if (config.regime && *config.regime != regime) {
        throw ConfigError("config declares a different regime than the requested command");
    }
    const RegVarSpec& spec = need_spec(config);
    if (!config.event) {
        throw ConfigError("missing 'event'");
    }
    return std::visit(
        [&](const auto& cone) {
            using C = std::decay_t<decltype(cone)>;
            TheoremRun run;
            run.regime = regime;
            run.cone = cone.name();
            if (!cone.flags().sub_invariant) {
                throw IncompatibleCone("cone '" + cone.name() + "' does not claim a sub-invariant metric");
            }
            const auto sampler = make_spectral(cone, config.spectral);
            // Regime problems are reported before any sampling work.
            require_regime(spec, config.schedule, regime, config.n_grid);
            run.sigma = choose_sigma(cone, sampler, config);
            const Model<C> model{cone, spec, sampler};
            const TheoremSettings s = config.theorem_settings(run.sigma.value);
            if (regime == Regime::theorem1) {
                run.result = theorem1_run(model, s);
                return run;
            }
            if (config.centering.kind == "zero") {
                run.result = theorem2_run_neutral(model, s);
                return run;
            }
            if constexpr (Embeddable<C>) {
                if (!cone.flags().invariant) {
                    throw IncompatibleCone("shifted events need an invariant metric; cone '" + cone.name() +
                                           "' does not claim one");
                }
                EmbeddedMean<C> mean;
                if (config.centering.kind == "embedded_mean_mc") {
                    mean = embedded_mean_mc(model, config.centering.samples, config.seed, config.threads);
                } else {
                    mean.mean = analytic_mean(cone, config.centering.payload);
                }
                run.result = theorem2_run_embedded(model, s, mean, config.centering.kind);
                return run;
            } else {
                throw NotEmbeddable(cone.name());
            }
        },
        make_cone(config.cone));
}

DiagnosticsRun run_diagnostics(const ExperimentConfig& config)
{
    const RegVarSpec& spec = need_spec(config);
    if (config.n_grid.empty()) {
        throw ConfigError("missing 'n_grid'");
    }
    require_regime(spec, config.schedule, Regime::theorem1, config.n_grid);
    DiagnosticsRun run;
    const AnyCone any = make_cone(config.cone);
    std::visit(
        [&](const auto& cone) {
            using C = std::decay_t<decltype(cone)>;
            run.cone = cone.name();
            const auto sampler = make_spectral(cone, config.spectral);
            const Model<C> model{cone, spec, sampler};
            TheoremSettings s = config.theorem_settings(1.0);
            run.sumconv = sumconv_check(model, s);
        },
        any);
    run.pass = run.sumconv.pass();
    const bool sub_invariant = std::visit([](const auto& c) { return c.flags().sub_invariant; }, any);
    if (config.single_jump && config.event && sub_invariant) {
        ExperimentConfig t1 = config;
        t1.regime.reset();
        run.theorem = run_theorem(t1, Regime::theorem1);
        run.jumps = single_big_jump_diag(run.theorem->result.rows, spec, *config.event,
                                         std::holds_alternative<MaxCone>(any));
    }
    return run;
}

KaramataRun run_karamata(const KaramataConfig& config)
{
    KaramataRun run;
    auto push = [&](KaramataRow row) {
        row.rel_err = row.limit != 0.0 ? std::abs(row.value - row.limit) / std::abs(row.limit)
                                       : std::abs(row.value - row.limit);
        if (row.checked) {
            row.pass = row.rel_err <= row.tolerance;
            run.pass = run.pass && row.pass;
        }
        run.rows.push_back(std::move(row));
    };
    for (const auto& q : config.queries) {
        const double largest = *std::max_element(q.xs.begin(), q.xs.end());
        const double limit = karamata_limit(q.query);
        for (double x : q.xs) {
            push({"ratio", q.label, x, karamata_ratio(q.query, x), limit, 0.0, q.tolerance, x == largest, true});
        }
    }
    for (const auto& m : config.moments) {
        const double largest = *std::max_element(m.ts.begin(), m.ts.end());
        const double limit = m.gamma / (m.gamma - m.spec.alpha());
        for (double t : m.ts) {
            push({"truncated_moment", m.label, t, truncated_moment_ratio(m.spec, m.gamma, t), limit, 0.0,
                  m.tolerance, t == largest, true});
        }
    }
    return run;
}

} // namespace conelab
