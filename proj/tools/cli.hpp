#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pglrep::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kNotOrthogonal = 2,
  kRelationViolated = 3,
  kInvalidClass = 4,
};

// Runs the command line `args` (args[0] is the program name), writing
// reports to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pglrep::cli
