#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace k3walls::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kDomain = 3,
  kIo = 4,
};

/// Runs the command line `args` (without the program name), writing JSON, CSV
/// or status text to `out` and diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3walls::cli
