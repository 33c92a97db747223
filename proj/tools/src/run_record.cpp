#include "typrank_app/run_record.hpp"

#include "typrank/error.hpp"

namespace typrank::app {

bool RunRecord::same_results(const RunRecord& other) const {
    return command == other.command && parameters == other.parameters && results == other.results &&
           rejected == other.rejected && version == other.version;
}

void to_json(nlohmann::json& j, const RunRecord& r) {
    j = nlohmann::json{{"command", r.command},
                       {"parameters", r.parameters},
                       {"results", r.results},
                       {"rejected", r.rejected},
                       {"elapsed_seconds", r.elapsed_seconds},
                       {"version", r.version}};
}

void from_json(const nlohmann::json& j, RunRecord& r) {
    j.at("command").get_to(r.command);
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    j.at("rejected").get_to(r.rejected);
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    j.at("version").get_to(r.version);
}

std::string to_json_string(const RunRecord& r, int indent) {
    return nlohmann::json(r).dump(indent);
}

RunRecord parse_run_record(const std::string& text) {
    try {
        return nlohmann::json::parse(text).get<RunRecord>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed run record: ") + e.what());
    }
}

std::string library_version() { return TYPRANK_VERSION; }

} // namespace typrank::app
