#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icsie::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kFailure = 1, kParse = 2, kBudget = 3 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icsie::cli
