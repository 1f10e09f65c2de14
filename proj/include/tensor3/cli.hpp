#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace t3::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kValidationError = 2,
  kSingularTensor = 3,
  kNoConvergence = 4,
};

/// Runs one subcommand. `args` excludes the program name. Tensor inputs
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace t3::cli
