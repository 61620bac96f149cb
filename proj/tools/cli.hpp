#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cob2::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kCheckFailure = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns an ExitStatus code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cob2::cli
