#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nega::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerdictFalse = 1,
  kUsage = 2,
  kInput = 3,
  kInfeasible = 4,
};

// Runs one command line (without the program name) and returns its exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nega::cli
