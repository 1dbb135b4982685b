#ifndef OSSMAX_TOOLS_CLI_HPP_
#define OSSMAX_TOOLS_CLI_HPP_

#include <ostream>

namespace ossmax::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidation = 1,
  kRuntime = 2,
  kVerificationFailed = 3,
};

// Default directory for generated files and CSV output when no path is given.
inline constexpr const char* kOutDirEnv = "OSSMAX_OUT_DIR";

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ossmax::cli

#endif  // OSSMAX_TOOLS_CLI_HPP_
