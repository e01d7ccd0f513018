// Run manifests: every file-emitting run records its configuration, tool
// version, timestamps, and output list as JSON. A manifest doubles as a
// config file, so `--config manifest.json` replays the run.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace entdyn::cli {

/// Current wall-clock time as ISO 8601 UTC, e.g. "2026-01-31T09:15:02Z".
std::string iso_timestamp_utc();

nlohmann::json make_manifest(const std::string& command, const nlohmann::json& config,
                             const std::string& tool_version, const std::string& started_at,
                             const std::string& finished_at,
                             const std::vector<std::string>& output_paths);

/// Pretty-printed, atomically written.
void write_manifest(const std::filesystem::path& path, const nlohmann::json& manifest);

/// Loads either a flat config object or a manifest. For a manifest the
/// embedded config is returned, after checking that its command matches
/// `expected_command`; mismatches and malformed files throw Error.
nlohmann::json load_config_file(const std::filesystem::path& path,
                                const std::string& expected_command);

} // namespace entdyn::cli
