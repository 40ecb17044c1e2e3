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
#include "conelab/lab.hpp"

#include <json.hpp>

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace conelab {

inline constexpr const char* kToolVersion = "0.3.0";

/// printf("%.12g") with nan/inf spelled out.
std::string format_number(double x);

std::string estimate_csv(std::span<const EstimateRow> rows);
std::string cond4_csv(const Cond4Report& report);
std::string sumconv_csv(const SumconvReport& report);
std::string jump_csv(const JumpReport& report);
std::string karamata_csv(const KaramataRun& run);
/// Two columns, n and ratio, for gnuplot.
std::string ratio_plot(std::span<const EstimateRow> rows);
std::string sumconv_plot(const SumconvReport& report);

nlohmann::json to_json(const AxiomReport& report);
nlohmann::json to_json(const TheoremRun& run);
nlohmann::json to_json(const DiagnosticsRun& run);
nlohmann::json to_json(const KaramataRun& run);

void write_text(const std::filesystem::path& path, const std::string& text);

struct RunManifest {
    std::string command;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    std::string started;
    std::string finished;
    std::vector<std::string> outputs;

    /// Hash of the manifest without its timestamps.
    std::uint64_t id() const;
    nlohmann::json to_json() const;
};

std::string utc_timestamp();
std::string hex64(std::uint64_t v);

} // namespace conelab
