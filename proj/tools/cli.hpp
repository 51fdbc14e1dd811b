#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace erconn::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 2,
  kCapabilityError = 3,
};

// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erconn::cli
