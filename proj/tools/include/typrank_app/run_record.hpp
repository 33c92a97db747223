#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace typrank::app {

/// One command invocation and its complete results. `parameters` holds every
/// flag that can change the results; the worker count is deliberately absent.
struct RunRecord {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    long rejected = 0;
    double elapsed_seconds = 0.0;
    std::string version;

    /// Equality on everything except elapsed_seconds.
    bool same_results(const RunRecord& other) const;
};

void to_json(nlohmann::json& j, const RunRecord& r);
void from_json(const nlohmann::json& j, RunRecord& r);

std::string to_json_string(const RunRecord& r, int indent = 2);
RunRecord parse_run_record(const std::string& text);

/// Library version string baked in at build time.
std::string library_version();

} // namespace typrank::app
