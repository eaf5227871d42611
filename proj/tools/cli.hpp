#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relgit::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kInvariantViolation = 2 };

/// Parses arguments, runs one subcommand and writes its report to `out`
/// (diagnostics go to `err`). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace relgit::cli
