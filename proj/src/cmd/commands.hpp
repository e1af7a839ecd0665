#pragma once

#include <string>

namespace pi1 {

/// Result of one subcommand run.  `output` is the full JSON or CSV
/// document; `status` is 0 on success and 1 when a selftest table
/// contains failures.  Usage problems (unknown command, bad or unknown
/// parameters) raise std::invalid_argument; computation failures raise
/// the library error types.
struct CommandResult {
    std::string output;
    int status = 0;
};

CommandResult run_command(const std::string& command, const std::string& params_json);

} // namespace pi1
