#include "cli/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>

#include "cli/csv.hpp"
#include "entdyn/errors.hpp"

namespace entdyn::cli {

std::string iso_timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", utc.tm_year + 1900,
                  utc.tm_mon + 1, utc.tm_mday, utc.tm_hour, utc.tm_min, utc.tm_sec);
    return buf;
}

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& config,
                             const std::string& tool_version, const std::string& started_at,
                             const std::string& finished_at,
                             const std::vector<std::string>& output_paths) {
    nlohmann::json m;
    m["command"] = command;
    m["config"] = config;
    m["tool_version"] = tool_version;
    m["started_at"] = started_at;
    m["finished_at"] = finished_at;
    m["outputs"] = output_paths;
    return m;
}

void write_manifest(const std::filesystem::path& path, const nlohmann::json& manifest) {
    write_text_file_atomic(path, manifest.dump(2) + "\n");
}

nlohmann::json load_config_file(const std::filesystem::path& path,
                                const std::string& expected_command) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open config file " + path.string());
    }
    nlohmann::json parsed;
    try {
        in >> parsed;
    } catch (const nlohmann::json::exception& e) {
        throw Error("config file " + path.string() + " is not valid JSON: " + e.what());
    }
    if (!parsed.is_object()) {
        throw Error("config file " + path.string() + " must hold a JSON object");
    }
    if (parsed.contains("config") && parsed.contains("command")) {
        // manifest form
        if (parsed["command"].get<std::string>() != expected_command) {
            throw Error("manifest " + path.string() + " was produced by '" +
                        parsed["command"].get<std::string>() + "', not '" + expected_command +
                        "'");
        }
        if (!parsed["config"].is_object()) {
            throw Error("manifest " + path.string() + " carries a malformed config");
        }
        return parsed["config"];
    }
    return parsed;
}

} // namespace entdyn::cli
