#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixent::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,  ///< domain, guard or verification failure
  kUsageError = 2,   ///< bad flags or unparsable scenario file
};

/// Runs one command line (args excludes the program name). All output goes
/// to the given streams so the CLI can be driven in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixent::cli
