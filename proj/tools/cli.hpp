#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace midloc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kTimeout = 1,
  kUsage = 2,
  kInvalidInstance = 3,
  kResourceLimit = 4,
  kInternalError = 5,
};

/// Parses and executes one command line. `args` excludes the program name.
/// Machine output goes to `out` (or --out); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace midloc::cli
