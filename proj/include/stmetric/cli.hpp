#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace stmetric {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_malformed = 2 };

/// Runs one command; `args` excludes the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stmetric
