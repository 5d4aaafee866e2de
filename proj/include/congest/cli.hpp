#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congest {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs `congest-lab <args...>`. JSON goes to `out`, human-readable
/// diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congest
