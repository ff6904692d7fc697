#pragma once

// Runs one subcommand over a session and produces a JSON report plus a
// plain-text rendering of it.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "laurent/error.hpp"
#include "laurent/session.hpp"

namespace laurent {

inline constexpr std::string_view kReportSchemaVersion = "1.0.0";

struct RunOptions {
    bool trace = false;
    std::optional<std::uint64_t> seed;   // enables the randomized self-check
    std::vector<std::string> targets;    // overrides `command` lines and defaults
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 module or hypothesis error, 3 parse error
    nlohmann::ordered_json report;
    std::string text;
};

const std::vector<std::string>& subcommands();

int exit_code_for(ErrorKind kind) noexcept;

RunResult run_command(const Session& session, std::string_view verb, const RunOptions& options);
// Parses `text` first; parse failures are reported with exit code 3.
RunResult run_text(std::string_view text, std::string_view verb, const RunOptions& options);

std::string render_text(const nlohmann::ordered_json& report, bool trace);

}  // namespace laurent
