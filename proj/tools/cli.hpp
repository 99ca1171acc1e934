#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

enum ExitCode : int {
  kDefinite = 0,
  kNegative = 1,       // counterexample found, or no witness
  kIndeterminate = 2,  // search budget exhausted
  kUsage = 3,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ramsey::cli
