#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpg::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kUndefinedGraph = 3,
  kCapExceeded = 4,
};

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpg::cli
