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

#include "conelab/config.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace conelab {

using nlohmann::json;

namespace {

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys)
{
    if (!j.is_object()) {
        throw ConfigError(where + " must be an object");
    }
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items()) {
        if (!allowed.contains(k)) {
            throw ConfigError("unknown key '" + k + "' in " + where);
        }
    }
}

const json& need(const json& j, const std::string& key, const std::string& where)
{
    if (!j.contains(key)) {
        throw ConfigError("missing '" + key + "' in " + where);
    }
    return j.at(key);
}

double number(const json& j, const std::string& what)
{
    if (!j.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    return j.get<double>();
}

std::uint64_t count(const json& j, const std::string& what)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        if (j.is_number_float() && j.get<double>() >= 0.0 && j.get<double>() == std::floor(j.get<double>()) &&
            j.get<double>() < 1.8e19) {
            return static_cast<std::uint64_t>(j.get<double>());
        }
        throw ConfigError(what + " must be a nonnegative integer");
    }
    return j.get<std::uint64_t>();
}

std::vector<double> numbers(const json& j, const std::string& what)
{
    if (!j.is_array()) {
        throw ConfigError(what + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& v : j) {
        out.push_back(number(v, what));
    }
    return out;
}

std::string text(const json& j, const std::string& what)
{
    if (!j.is_string()) {
        throw ConfigError(what + " must be a string");
    }
    return j.get<std::string>();
}

ConeConfig parse_cone(const json& j)
{
    allow_keys(j, "cone", {"id", "dim", "metric", "p", "grid", "flags"});
    ConeConfig c;
    c.id = text(need(j, "id", "cone"), "cone.id");
    if (c.id != "max" && c.id != "convex_bodies" && c.id != "functions" && c.id != "union") {
        throw ConfigError("unknown cone id '" + c.id + "'");
    }
    c.dim = c.id == "union" ? 1 : 2;
    if (j.contains("dim")) {
        c.dim = static_cast<int>(count(j["dim"], "cone.dim"));
    }
    if (j.contains("metric")) {
        const auto m = text(j["metric"], "cone.metric");
        if (m == "hausdorff") {
            c.metric = BodyMetric::hausdorff;
        } else if (m == "lp") {
            c.metric = BodyMetric::lp;
        } else {
            throw ConfigError("cone.metric must be 'hausdorff' or 'lp'");
        }
    }
    if (j.contains("p")) {
        c.p = number(j["p"], "cone.p");
    }
    if (j.contains("grid")) {
        c.grid = count(j["grid"], "cone.grid");
    }
    if (j.contains("flags")) {
        const auto& f = j["flags"];
        allow_keys(f, "cone.flags", {"pointed", "sub_invariant", "invariant", "second_distributive"});
        auto flag = [&](const char* key, std::optional<bool>& out) {
            if (f.contains(key)) {
                if (!f[key].is_boolean()) {
                    throw ConfigError(std::string("cone.flags.") + key + " must be a boolean");
                }
                out = f[key].get<bool>();
            }
        };
        flag("pointed", c.pointed);
        flag("sub_invariant", c.sub_invariant);
        flag("invariant", c.invariant);
        flag("second_distributive", c.second_distributive);
    }
    return c;
}

SpectralSpec parse_spectral(const json& j)
{
    allow_keys(j, "spec.spectral", {"preset", "peak", "jitter", "direction"});
    SpectralSpec s;
    s.preset = text(need(j, "preset", "spec.spectral"), "spec.spectral.preset");
    if (j.contains("peak")) {
        s.peak = number(j["peak"], "spec.spectral.peak");
    }
    if (j.contains("jitter")) {
        s.jitter = number(j["jitter"], "spec.spectral.jitter");
    }
    if (j.contains("direction")) {
        s.direction = numbers(j["direction"], "spec.spectral.direction");
    }
    return s;
}

PowerSchedule parse_schedule(const json& j)
{
    allow_keys(j, "schedule", {"kind", "exponent", "coeff"});
    if (j.contains("kind") && text(j["kind"], "schedule.kind") != "power") {
        throw ConfigError("schedule.kind must be 'power'");
    }
    PowerSchedule s;
    s.exponent = number(need(j, "exponent", "schedule"), "schedule.exponent");
    if (j.contains("coeff")) {
        s.coeff = number(j["coeff"], "schedule.coeff");
    }
    if (!(s.exponent > 0.0) || !(s.coeff > 0.0)) {
        throw ConfigError("schedule exponent and coeff must be positive");
    }
    return s;
}

} // namespace

ConeFlags ConeConfig::resolve(ConeFlags defaults) const
{
    ConeFlags f = defaults;
    f.pointed = pointed.value_or(f.pointed);
    f.sub_invariant = sub_invariant.value_or(f.sub_invariant);
    f.invariant = invariant.value_or(f.invariant);
    f.second_distributive = second_distributive.value_or(f.second_distributive);
    return f;
}

TheoremSettings ExperimentConfig::theorem_settings(double sigma) const
{
    if (!event) {
        throw ConfigError("missing 'event'");
    }
    if (n_grid.empty()) {
        throw ConfigError("missing 'n_grid'");
    }
    TheoremSettings s;
    s.event = *event;
    s.schedule = schedule;
    s.n_grid = n_grid;
    s.trials = trials;
    s.seed = seed;
    s.threads = threads;
    s.sigma_B = sigma;
    s.band = band;
    s.use_exact_oracle = exact_oracle;
    s.cond4_replicates = cond4_replicates;
    s.sumconv_replicates = sumconv_replicates;
    return s;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError("config file " + path.string() + " is not valid JSON: " + e.what());
    }
}

RegVarSpec parse_spec(const json& j)
{
    allow_keys(j, "spec", {"alpha", "t_min", "slowly_varying", "spectral"});
    const double alpha = number(need(j, "alpha", "spec"), "spec.alpha");
    const double t_min = j.contains("t_min") ? number(j["t_min"], "spec.t_min") : 1.0;
    SlowlyVarying factor = ConstantFactor{};
    if (j.contains("slowly_varying")) {
        const auto& s = j["slowly_varying"];
        allow_keys(s, "spec.slowly_varying", {"kind", "c", "kappa"});
        const auto kind = text(need(s, "kind", "spec.slowly_varying"), "spec.slowly_varying.kind");
        if (kind == "constant") {
            factor = ConstantFactor{s.contains("c") ? number(s["c"], "spec.slowly_varying.c") : 1.0};
        } else if (kind == "log_power") {
            factor = LogPowerFactor{number(need(s, "kappa", "spec.slowly_varying"), "spec.slowly_varying.kappa")};
        } else {
            throw ConfigError("spec.slowly_varying.kind must be 'constant' or 'log_power'");
        }
    }
    return RegVarSpec(alpha, t_min, factor);
}

GridFunction parse_grid_function(const json& j)
{
    allow_keys(j, "grid function", {"knots", "values"});
    try {
        return GridFunction(numbers(need(j, "knots", "grid function"), "knots"),
                            numbers(need(j, "values", "grid function"), "values"));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid grid function: ") + e.what());
    }
}

DirectionPredicate parse_predicate(const json& j)
{
    allow_keys(j, "event.direction", {"kind", "u0", "c", "template", "theta"});
    const auto kind = text(need(j, "kind", "event.direction"), "event.direction.kind");
    if (kind == "full") {
        return FullSphere{};
    }
    if (kind == "support_threshold") {
        return SupportThreshold{numbers(need(j, "u0", "event.direction"), "u0"),
                                number(need(j, "c", "event.direction"), "c")};
    }
    if (kind == "coordinate_threshold") {
        return CoordinateThreshold{number(need(j, "c", "event.direction"), "c")};
    }
    if (kind == "correlation_threshold") {
        return CorrelationThreshold{parse_grid_function(need(j, "template", "event.direction")),
                                    number(need(j, "theta", "event.direction"), "theta")};
    }
    throw ConfigError("unknown direction predicate kind '" + kind + "'");
}

ExperimentConfig parse_experiment(const json& j)
{
    try {
        allow_keys(j, "config",
                   {"cone", "spec", "event", "sigma_B", "schedule", "n_grid", "trials", "seed", "regime",
                    "centering", "oracle", "band", "axioms", "threads", "cond4_replicates", "sumconv_replicates",
                    "single_jump", "description"});
        ExperimentConfig c;
        c.raw = j;
        c.cone = parse_cone(need(j, "cone", "config"));
        if (j.contains("spec")) {
            c.spec = parse_spec(j["spec"]);
            if (j["spec"].contains("spectral")) {
                c.spectral = parse_spectral(j["spec"]["spectral"]);
            }
        }
        if (j.contains("event")) {
            const auto& e = j["event"];
            allow_keys(e, "event", {"r", "direction"});
            DirectionPredicate b = FullSphere{};
            if (e.contains("direction")) {
                b = parse_predicate(e["direction"]);
            }
            c.event = PolarEvent(number(need(e, "r", "event"), "event.r"), std::move(b));
        }
        if (j.contains("sigma_B")) {
            const auto& s = j["sigma_B"];
            if (s.is_number()) {
                c.sigma_B = s.get<double>();
                if (!(*c.sigma_B >= 0.0 && *c.sigma_B <= 1.0)) {
                    throw ConfigError("sigma_B must lie in [0, 1]");
                }
            } else if (s.is_string()) {
                static const std::regex pattern(R"(estimate\((\d+)\))");
                std::smatch m;
                const auto str = s.get<std::string>();
                if (!std::regex_match(str, m, pattern)) {
                    throw ConfigError("sigma_B must be a number or 'estimate(N)'");
                }
                c.sigma_estimate = std::stoull(m[1].str());
                if (c.sigma_estimate == 0) {
                    throw ConfigError("estimate(N) needs N >= 1");
                }
            } else {
                throw ConfigError("sigma_B must be a number or 'estimate(N)'");
            }
        }
        if (j.contains("schedule")) {
            c.schedule = parse_schedule(j["schedule"]);
        }
        if (j.contains("n_grid")) {
            if (!j["n_grid"].is_array() || j["n_grid"].empty()) {
                throw ConfigError("n_grid must be a nonempty array");
            }
            for (const auto& v : j["n_grid"]) {
                const auto n = count(v, "n_grid entry");
                if (n == 0 || (!c.n_grid.empty() && n <= c.n_grid.back())) {
                    throw ConfigError("n_grid must be strictly increasing positive integers");
                }
                c.n_grid.push_back(n);
            }
        }
        if (j.contains("trials")) {
            c.trials = count(j["trials"], "trials");
            if (c.trials == 0) {
                throw ConfigError("trials must be positive");
            }
        }
        if (j.contains("seed")) {
            c.seed = count(j["seed"], "seed");
        }
        if (j.contains("regime")) {
            const auto r = text(j["regime"], "regime");
            if (r == "theorem1") {
                c.regime = Regime::theorem1;
            } else if (r == "theorem2") {
                c.regime = Regime::theorem2;
            } else {
                throw ConfigError("regime must be 'theorem1' or 'theorem2'");
            }
        }
        if (j.contains("centering")) {
            const auto& k = j["centering"];
            allow_keys(k, "centering", {"kind", "samples", "mean"});
            c.centering.kind = text(need(k, "kind", "centering"), "centering.kind");
            if (c.centering.kind != "zero" && c.centering.kind != "embedded_mean_analytic" &&
                c.centering.kind != "embedded_mean_mc") {
                throw ConfigError("unknown centering kind '" + c.centering.kind + "'");
            }
            if (k.contains("samples")) {
                c.centering.samples = count(k["samples"], "centering.samples");
            }
            if (c.centering.kind == "embedded_mean_analytic") {
                c.centering.payload = need(k, "mean", "centering");
            }
        }
        if (j.contains("oracle")) {
            const auto o = text(j["oracle"], "oracle");
            if (o != "auto" && o != "mc") {
                throw ConfigError("oracle must be 'auto' or 'mc'");
            }
            c.exact_oracle = o == "auto";
        }
        if (j.contains("band")) {
            const auto b = numbers(j["band"], "band");
            if (b.size() != 2 || !(b[0] < b[1])) {
                throw ConfigError("band must be [lo, hi] with lo < hi");
            }
            c.band = {b[0], b[1]};
        }
        if (j.contains("axioms")) {
            const auto& a = j["axioms"];
            allow_keys(a, "axioms", {"trials", "tol"});
            if (a.contains("trials")) {
                c.axioms.trials = count(a["trials"], "axioms.trials");
            }
            if (a.contains("tol")) {
                c.axioms.tol = number(a["tol"], "axioms.tol");
            }
        }
        if (j.contains("threads")) {
            c.threads = static_cast<unsigned>(std::max<std::uint64_t>(1, count(j["threads"], "threads")));
        }
        if (j.contains("cond4_replicates")) {
            c.cond4_replicates = std::max<std::uint64_t>(2, count(j["cond4_replicates"], "cond4_replicates"));
        }
        if (j.contains("sumconv_replicates")) {
            c.sumconv_replicates = std::max<std::uint64_t>(1, count(j["sumconv_replicates"], "sumconv_replicates"));
        }
        if (j.contains("single_jump")) {
            if (!j["single_jump"].is_boolean()) {
                throw ConfigError("single_jump must be a boolean");
            }
            c.single_jump = j["single_jump"].get<bool>();
        }
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

namespace {

KaramataCase parse_query(const json& j, std::size_t index)
{
    allow_keys(j, "karamata query", {"label", "f", "beta", "a", "x", "tolerance", "branch"});
    KaramataCase c;
    c.label = j.contains("label") ? text(j["label"], "label") : "query" + std::to_string(index);
    const auto& f = need(j, "f", "karamata query");
    allow_keys(f, "karamata f", {"kind", "rho", "kappa", "spec"});
    const auto kind = text(need(f, "kind", "karamata f"), "f.kind");
    auto& q = c.query;
    if (kind == "power") {
        const double rho = number(need(f, "rho", "karamata f"), "f.rho");
        q.rho = rho;
        q.f = [rho](double t) { return std::pow(t, rho); };
    } else if (kind == "power_log") {
        const double rho = number(need(f, "rho", "karamata f"), "f.rho");
        const double kappa = number(need(f, "kappa", "karamata f"), "f.kappa");
        q.rho = rho;
        q.f = [rho, kappa](double t) { return std::pow(t, rho) * std::pow(1.0 + std::log(t), kappa); };
    } else if (kind == "tail") {
        const RegVarSpec spec = parse_spec(need(f, "spec", "karamata f"));
        q.rho = -spec.alpha();
        q.f = [spec](double t) { return spec.tail_prob(t); };
        q.breakpoints = {spec.t_min(), spec.tail_quantile(1.0)};
    } else {
        throw ConfigError("unknown karamata function kind '" + kind + "'");
    }
    q.beta = number(need(j, "beta", "karamata query"), "beta");
    q.a = j.contains("a") ? number(j["a"], "a") : 1.0;
    if (kind == "power_log" && !(q.a >= 1.0)) {
        throw ConfigError("power_log functions need a >= 1");
    }
    if (!(q.a > 0.0)) {
        throw ConfigError("karamata lower limit a must be positive");
    }
    if (j.contains("branch")) {
        const auto b = text(j["branch"], "branch");
        if (b == "lower") {
            q.branch = KaramataBranch::lower;
        } else if (b == "upper") {
            q.branch = KaramataBranch::upper;
        } else {
            throw ConfigError("branch must be 'lower' or 'upper'");
        }
    }
    c.xs = numbers(need(j, "x", "karamata query"), "x");
    if (c.xs.empty()) {
        throw ConfigError("karamata query needs at least one x");
    }
    for (double x : c.xs) {
        if (!(x > q.a)) {
            throw ConfigError("karamata x values must exceed a");
        }
    }
    if (j.contains("tolerance")) {
        c.tolerance = number(j["tolerance"], "tolerance");
    }
    return c;
}

MomentCase parse_moment(const json& j, std::size_t index)
{
    allow_keys(j, "truncated moment", {"label", "spec", "gamma", "T", "tolerance"});
    MomentCase c{j.contains("label") ? text(j["label"], "label") : "moment" + std::to_string(index),
                 parse_spec(need(j, "spec", "truncated moment")),
                 number(need(j, "gamma", "truncated moment"), "gamma"),
                 numbers(need(j, "T", "truncated moment"), "T"),
                 0.01};
    if (j.contains("tolerance")) {
        c.tolerance = number(j["tolerance"], "tolerance");
    }
    if (!(c.gamma > c.spec.alpha())) {
        throw ConfigError("truncated moment needs gamma > alpha");
    }
    if (c.ts.empty()) {
        throw ConfigError("truncated moment needs at least one T");
    }
    for (double t : c.ts) {
        if (!(t > c.spec.t_min())) {
            throw ConfigError("truncated moment T values must exceed t_min");
        }
    }
    return c;
}

} // namespace

KaramataConfig parse_karamata(const json& j)
{
    try {
        allow_keys(j, "config", {"karamata", "description"});
        const auto& k = need(j, "karamata", "config");
        allow_keys(k, "karamata", {"queries", "truncated_moment"});
        KaramataConfig c;
        c.raw = j;
        if (k.contains("queries")) {
            for (const auto& q : k["queries"]) {
                c.queries.push_back(parse_query(q, c.queries.size()));
            }
        }
        if (k.contains("truncated_moment")) {
            for (const auto& m : k["truncated_moment"]) {
                c.moments.push_back(parse_moment(m, c.moments.size()));
            }
        }
        if (c.queries.empty() && c.moments.empty()) {
            throw ConfigError("karamata config has no queries");
        }
        return c;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

std::uint64_t config_hash(const json& j)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace conelab
