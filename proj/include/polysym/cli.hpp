#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysym::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysym::cli
