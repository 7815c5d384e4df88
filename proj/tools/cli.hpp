#pragma once

#include <iosfwd>

namespace liaison::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kError = 1,
  kCheckFailed = 2,
  kNotImplied = 3,
};

/// Runs the command line with all output sent to `out` / `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liaison::cli
