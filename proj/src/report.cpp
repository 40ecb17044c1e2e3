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

#include "conelab/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace conelab {

using nlohmann::json;

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

std::string csv_line(std::initializer_list<std::string> cells)
{
    std::string out;
    for (const auto& c : cells) {
        if (!out.empty()) {
            out += ',';
        }
        out += c;
    }
    return out + '\n';
}

std::string u(std::uint64_t v)
{
    return std::to_string(v);
}

std::string f(double v)
{
    return format_number(v);
}

json number_or_null(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

} // namespace

std::string estimate_csv(std::span<const EstimateRow> rows)
{
    std::string out = "n,lambda_n,gamma_n,p_hat,ci_lo,ci_hi,gamma_p,mu_U,ratio,single_jump_ref,trials_used,exact\n";
    for (const auto& r : rows) {
        out += csv_line({u(r.n), f(r.lambda_n), f(r.gamma_n), f(r.p_hat), f(r.ci_lo), f(r.ci_hi), f(r.gamma_p),
                         f(r.mu_U), f(r.ratio), f(r.single_jump_ref), u(r.trials_used), r.exact ? "1" : "0"});
    }
    return out;
}

std::string cond4_csv(const Cond4Report& report)
{
    std::string out = "n,lambda_n,mean_d_over_lambda,standard_error\n";
    for (const auto& r : report.rows) {
        out += csv_line({u(r.n), f(r.lambda_n), f(r.mean_ratio), f(r.standard_error)});
    }
    return out;
}

std::string sumconv_csv(const SumconvReport& report)
{
    std::string out = "n,lambda_n,q95,q95_exact,bound_violations,truncated_mean_term\n";
    for (const auto& r : report.rows) {
        out += csv_line({u(r.n), f(r.lambda_n), f(r.q95), f(r.q95_exact), u(r.bound_violations),
                         f(r.truncated_mean_term)});
    }
    return out;
}

std::string jump_csv(const JumpReport& report)
{
    std::string out = "n,p_hat,single_jump_ref,gap,bound\n";
    for (const auto& r : report.rows) {
        out += csv_line({u(r.n), f(r.p_hat), f(r.single_jump_ref), f(r.gap), f(r.bound)});
    }
    return out;
}

std::string karamata_csv(const KaramataRun& run)
{
    std::string out = "kind,label,x,value,limit,rel_err,tolerance,checked,pass\n";
    for (const auto& r : run.rows) {
        out += csv_line({r.kind, r.label, f(r.x), f(r.value), f(r.limit), f(r.rel_err), f(r.tolerance),
                         r.checked ? "1" : "0", r.pass ? "1" : "0"});
    }
    return out;
}

std::string ratio_plot(std::span<const EstimateRow> rows)
{
    std::string out = "# n ratio\n";
    for (const auto& r : rows) {
        out += u(r.n) + ' ' + f(r.ratio) + '\n';
    }
    return out;
}

std::string sumconv_plot(const SumconvReport& report)
{
    std::string out = "# n q95\n";
    for (const auto& r : report.rows) {
        out += u(r.n) + ' ' + f(r.q95) + '\n';
    }
    return out;
}

json to_json(const AxiomReport& report)
{
    json axioms = json::array();
    for (const auto& r : report.results) {
        std::string verdict = r.passed ? "pass" : (r.declared ? "fails (declared)" : "fails (undeclared)");
        json a = {{"axiom", r.name},     {"declared", r.declared}, {"verdict", verdict},
                  {"checks", r.checks},  {"failures", r.failures}};
        if (!r.passed) {
            a["counterexample"] = r.counterexample;
        }
        axioms.push_back(std::move(a));
    }
    return {{"cone", report.cone},
            {"trials", report.trials},
            {"tol", report.tol},
            {"declared_ok", report.declared_ok()},
            {"axioms", std::move(axioms)}};
}

namespace {

json regime_json(const RegimeReport& r)
{
    return {{"valid", r.valid}, {"violated", r.violated}, {"notes", r.notes}};
}

json rows_json(std::span<const EstimateRow> rows)
{
    json out = json::array();
    for (const auto& r : rows) {
        out.push_back({{"n", r.n},
                       {"lambda_n", r.lambda_n},
                       {"p_hat", r.p_hat},
                       {"ratio", number_or_null(r.ratio)},
                       {"successes", r.successes},
                       {"thin", r.thin},
                       {"exact", r.exact}});
    }
    return out;
}

json cond4_json(const Cond4Report& c)
{
    json rows = json::array();
    for (const auto& r : c.rows) {
        rows.push_back({{"n", r.n}, {"mean_d_over_lambda", r.mean_ratio}, {"standard_error", r.standard_error}});
    }
    return {{"replicates", c.replicates},
            {"decreasing", c.decreasing},
            {"final_below_0.1", c.final_below},
            {"pass", c.pass()},
            {"rows", std::move(rows)}};
}

} // namespace

json to_json(const TheoremRun& run)
{
    const auto& r = run.result;
    json j = {{"regime", run.regime == Regime::theorem1 ? "theorem1" : "theorem2"},
              {"cone", run.cone},
              {"verdict", r.pass ? "PASS" : "FAIL"},
              {"thin", r.thin},
              {"sigma_B", run.sigma.value},
              {"sigma_source", run.sigma.source},
              {"regime_check", regime_json(r.regime)},
              {"rows", rows_json(r.rows)}};
    if (run.sigma.estimate) {
        j["sigma_ci"] = {run.sigma.estimate->ci.lo, run.sigma.estimate->ci.hi};
    }
    if (r.cond4) {
        j["cond4"] = cond4_json(*r.cond4);
    }
    if (run.regime == Regime::theorem2) {
        j["centering"] = {{"kind", r.centering.kind},
                          {"samples", r.centering.samples},
                          {"mean_norm", r.centering.mean_norm},
                          {"standard_error", r.centering.standard_error}};
    }
    return j;
}

json to_json(const DiagnosticsRun& run)
{
    json rows = json::array();
    for (const auto& r : run.sumconv.rows) {
        rows.push_back({{"n", r.n},
                        {"q95", r.q95},
                        {"q95_exact", number_or_null(r.q95_exact)},
                        {"bound_violations", r.bound_violations},
                        {"truncated_mean_term", number_or_null(r.truncated_mean_term)}});
    }
    json j = {{"cone", run.cone},
              {"verdict", run.pass ? "PASS" : "FAIL"},
              {"sumconv",
               {{"replicates", run.sumconv.replicates},
                {"decreasing", run.sumconv.decreasing},
                {"final_below_0.05", run.sumconv.final_below},
                {"truncated_mean_term_decreasing", run.sumconv.extra_decreasing},
                {"rows", std::move(rows)}}}};
    if (run.jumps) {
        json gaps = json::array();
        for (const auto& g : run.jumps->rows) {
            gaps.push_back({{"n", g.n}, {"gap", number_or_null(g.gap)}, {"bound", number_or_null(g.bound)}});
        }
        j["single_jump"] = {{"gap_decreasing", run.jumps->gap_decreasing}, {"rows", std::move(gaps)}};
    }
    if (run.theorem) {
        j["estimates"] = to_json(*run.theorem);
    }
    return j;
}

json to_json(const KaramataRun& run)
{
    json rows = json::array();
    for (const auto& r : run.rows) {
        if (r.checked) {
            rows.push_back({{"kind", r.kind},
                            {"label", r.label},
                            {"x", r.x},
                            {"value", r.value},
                            {"limit", r.limit},
                            {"rel_err", r.rel_err},
                            {"tolerance", r.tolerance},
                            {"pass", r.pass}});
        }
    }
    return {{"verdict", run.pass ? "PASS" : "FAIL"}, {"checked", std::move(rows)}};
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::uint64_t RunManifest::id() const
{
    json j = {{"command", command},
              {"config_hash", hex64(config_hash)},
              {"tool_version", kToolVersion},
              {"seed", seed},
              {"outputs", outputs}};
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

json RunManifest::to_json() const
{
    return {{"manifest_id", hex64(id())},
            {"command", command},
            {"config_hash", hex64(config_hash)},
            {"tool_version", kToolVersion},
            {"seed", seed},
            {"started", started},
            {"finished", finished},
            {"outputs", outputs}};
}

} // namespace conelab
