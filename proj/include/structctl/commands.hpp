#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace structctl::cli {

/// Exit codes of the structctl tool.
enum ExitCode : int {
  kOk = 0,
  kNotControllable = 1,  // also infeasible / not observable
  kUsage = 2,            // bad arguments, unreadable or malformed input, oversize oracle request
  kInternal = 3,         // deciders disagreed under --verify
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace structctl::cli
