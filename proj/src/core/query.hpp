#pragma once

// JSON request/response layer shared by the C API and the command line.
//
// Request:  {"command": "...", ...parameters}
// Response: {"status": "ok"|"unknown"|"error", "command": ..., "payload": {...},
//            "rule_trace": [...], "message": "..." (when not ok),
//            "error_kind": "..." (when not ok)}

#include <filesystem>
#include <json.hpp>
#include <string>

#include "homotopy_db.hpp"

namespace coincalc::query {

using nlohmann::json;

json run(const Database& db, const json& request);

/// Loads and validates a database file. Load failures are reported in the
/// same shape as validator failures, keyed by the offending instance.
json validate_db_file(const std::filesystem::path& path);
json validate_database(const Database& db);

/// Exit code for a response: 0 ok, 2 unknown, 1 error.
int exit_code(const json& response);

/// Plain-text rendering of a response.
std::string render_human(const json& response);

/// Response for a failure raised outside run (e.g. while loading).
json error_response(const std::string& command, const Error& e);

}  // namespace coincalc::query
