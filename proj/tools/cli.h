#ifndef SEPCODE_TOOLS_CLI_H_
#define SEPCODE_TOOLS_CLI_H_

#include <ostream>

namespace sepcode::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kHolds = 0,
  kViolated = 1,
  kUsage = 2,
  kDisagreement = 3,
};

// Runs `sepcode` with the given arguments, writing results to `out` and
// diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace sepcode::cli

#endif  // SEPCODE_TOOLS_CLI_H_
