#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperpoly::cli {

enum ExitCode : int { kHolds = 0, kFails = 1, kParse = 2, kValidation = 3, kNonConvergence = 4 };

/// Parses argv, runs one subcommand, writes the report to out and any summary to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperpoly::cli
