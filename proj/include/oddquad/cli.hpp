#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oddquad {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitMismatch = 3 };

/// Runs the CLI on `args` (without the program name), writing results to `out`
/// (unless --out redirects them) and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddquad
