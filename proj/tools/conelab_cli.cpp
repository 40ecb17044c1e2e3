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
#include "conelab/lab.hpp"
#include "conelab/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;
using namespace conelab;

namespace {

enum Exit { kPass = 0, kFail = 1, kConfig = 2, kRegime = 3, kThin = 4 };

struct Options {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    bool allow_thin = false;
};

struct Outputs {
    fs::path dir;
    std::string command;
    RunManifest manifest;
    std::vector<std::pair<std::string, std::string>> files;

    void add(const std::string& suffix, std::string text)
    {
        const std::string name = command + suffix;
        manifest.outputs.push_back(name);
        files.emplace_back(name, std::move(text));
    }

    /// Writes every file plus the summary and manifest.
    void flush(nlohmann::json summary)
    {
        fs::create_directories(dir);
        const std::string summary_name = command + "_summary.json";
        const std::string manifest_name = command + "_manifest.json";
        manifest.outputs.push_back(summary_name);
        summary["manifest_id"] = hex64(manifest.id());
        for (const auto& [name, text] : files) {
            write_text(dir / name, text);
        }
        write_text(dir / summary_name, summary.dump(2) + "\n");
        manifest.finished = utc_timestamp();
        write_text(dir / manifest_name, manifest.to_json().dump(2) + "\n");
    }
};

nlohmann::json load(const Options& opt)
{
    auto j = read_json_file(opt.config);
    if (!j.is_object()) {
        throw ConfigError("config root must be an object");
    }
    if (opt.seed) {
        j["seed"] = *opt.seed;
    }
    if (opt.threads) {
        j["threads"] = *opt.threads;
    }
    return j;
}

Outputs begin(const Options& opt, const std::string& command, const nlohmann::json& j)
{
    Outputs o;
    o.dir = opt.out;
    o.command = command;
    o.manifest.command = command;
    nlohmann::json hashed = j;
    hashed.erase("threads");
    o.manifest.config_hash = config_hash(hashed);
    o.manifest.seed = j.value("seed", std::uint64_t{1});
    o.manifest.started = utc_timestamp();
    return o;
}

void print_rows(const std::vector<EstimateRow>& rows)
{
    std::printf("%10s %14s %14s %14s %10s %s\n", "n", "lambda_n", "p_hat", "single_jump", "ratio", "");
    for (const auto& r : rows) {
        std::printf("%10llu %14.6g %14.6g %14.6g %10.5f%s%s\n", static_cast<unsigned long long>(r.n), r.lambda_n,
                    r.p_hat, r.single_jump_ref, r.ratio, r.exact ? "  exact" : "", r.thin ? "  THIN" : "");
    }
}

int thin_or(bool thin, const Options& opt, int code)
{
    if (thin && !opt.allow_thin) {
        std::fprintf(stderr, "budget too small: fewer than %llu successes in some row (use --allow-thin)\n",
                     static_cast<unsigned long long>(kMinSuccesses));
        return kThin;
    }
    return code;
}

int cmd_axioms(const Options& opt)
{
    const auto j = load(opt);
    const auto config = parse_experiment(j);
    auto out = begin(opt, "axioms", j);
    const auto report = run_axioms(config);
    for (const auto& r : report.results) {
        std::printf("%-22s %-10s %s\n", r.name.c_str(), r.declared ? "declared" : "",
                    r.passed ? "pass" : (r.declared ? "FAIL" : "fails (undeclared)"));
        if (!r.passed) {
            std::printf("    %s\n", r.counterexample.c_str());
        }
    }
    out.flush(to_json(report));
    return report.declared_ok() ? kPass : kFail;
}

int cmd_theorem(const Options& opt, Regime regime)
{
    const auto j = load(opt);
    const auto config = parse_experiment(j);
    const std::string name = regime == Regime::theorem1 ? "theorem1" : "theorem2";
    auto out = begin(opt, name, j);
    const auto run = run_theorem(config, regime);
    print_rows(run.result.rows);
    out.add(".csv", estimate_csv(run.result.rows));
    out.add("_plot.dat", ratio_plot(run.result.rows));
    if (run.result.cond4) {
        out.add("_cond4.csv", cond4_csv(*run.result.cond4));
        for (const auto& c : run.result.cond4->rows) {
            std::printf("cond4 n=%llu  E d(S_n,A_n)/lambda_n = %.6g (se %.2g)\n",
                        static_cast<unsigned long long>(c.n), c.mean_ratio, c.standard_error);
        }
    }
    out.flush(to_json(run));
    std::printf("verdict: %s\n", run.result.pass ? "PASS" : "FAIL");
    return thin_or(run.result.thin, opt, run.result.pass ? kPass : kFail);
}

int cmd_diagnostics(const Options& opt)
{
    const auto j = load(opt);
    const auto config = parse_experiment(j);
    auto out = begin(opt, "diagnostics", j);
    const auto run = run_diagnostics(config);
    std::printf("%10s %14s %14s %14s\n", "n", "q95", "q95_exact", "violations");
    for (const auto& r : run.sumconv.rows) {
        std::printf("%10llu %14.6g %14.6g %14llu\n", static_cast<unsigned long long>(r.n), r.q95, r.q95_exact,
                    static_cast<unsigned long long>(r.bound_violations));
    }
    out.add(".csv", sumconv_csv(run.sumconv));
    out.add("_plot.dat", sumconv_plot(run.sumconv));
    bool thin = false;
    if (run.theorem) {
        print_rows(run.theorem->result.rows);
        out.add("_estimates.csv", estimate_csv(run.theorem->result.rows));
        thin = run.theorem->result.thin;
    }
    if (run.jumps) {
        out.add("_jump.csv", jump_csv(*run.jumps));
    }
    out.flush(to_json(run));
    std::printf("verdict: %s\n", run.pass ? "PASS" : "FAIL");
    return thin_or(thin, opt, run.pass ? kPass : kFail);
}

int cmd_karamata(const Options& opt)
{
    const auto j = load(opt);
    const auto config = parse_karamata(j);
    auto out = begin(opt, "karamata", j);
    const auto run = run_karamata(config);
    for (const auto& r : run.rows) {
        std::printf("%-16s %-18s x=%-10.4g value=%-14.10g limit=%-10.6g rel_err=%.3g%s\n", r.kind.c_str(),
                    r.label.c_str(), r.x, r.value, r.limit, r.rel_err,
                    r.checked ? (r.pass ? "  ok" : "  FAIL") : "");
    }
    out.add(".csv", karamata_csv(run));
    out.flush(to_json(run));
    std::printf("verdict: %s\n", run.pass ? "PASS" : "FAIL");
    return run.pass ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"conelab: heavy-tailed sums in convex cones"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", opt.out, "output directory");
        sub->add_option("--seed", opt.seed, "seed, overrides the config");
        sub->add_option("--threads", opt.threads, "worker threads; results do not depend on it")
            ->check(CLI::Range(1U, 1024U));
        sub->add_flag("--allow-thin", opt.allow_thin, "do not fail when a row has fewer than 20 successes");
    };
    auto* axioms = app.add_subcommand("axioms", "randomized checks of the cone axioms");
    auto* theorem1 = app.add_subcommand("theorem1", "uncentred large deviations of partial sums");
    auto* theorem2 = app.add_subcommand("theorem2", "centred large deviations with mean-distance report");
    auto* diagnostics = app.add_subcommand("diagnostics", "|S_n|/lambda_n quantiles and single-jump gaps");
    auto* karamata = app.add_subcommand("karamata", "numerical Karamata and truncated-moment checks");
    for (auto* sub : {axioms, theorem1, theorem2, diagnostics, karamata}) {
        common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfig;
    }

    try {
        if (*axioms) {
            return cmd_axioms(opt);
        }
        if (*theorem1) {
            return cmd_theorem(opt, Regime::theorem1);
        }
        if (*theorem2) {
            return cmd_theorem(opt, Regime::theorem2);
        }
        if (*diagnostics) {
            return cmd_diagnostics(opt);
        }
        return cmd_karamata(opt);
    } catch (const RegimeViolation& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kRegime;
    } catch (const AxiomViolation& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kFail;
    } catch (const BudgetTooSmall& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return kThin;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const IncompatibleCone& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const NotEmbeddable& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const PredicateUnsupported& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const DimensionMismatch& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kFail;
    }
}
