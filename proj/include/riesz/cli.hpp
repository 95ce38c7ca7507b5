#pragma once

#include <ostream>

namespace riesz {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitMismatch = 3,
};

/// Entry point for the `riesz` tool: subcommands energy, coeffs, modified,
/// verify. A single JSON document goes to `out`, log lines to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace riesz
