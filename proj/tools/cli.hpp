#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stmodal {

enum ExitCode : int { exit_ok = 0, exit_counter = 1, exit_usage = 2, exit_budget = 3 };

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace stmodal
