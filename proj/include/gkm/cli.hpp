#pragma once

#include <iosfwd>

namespace gkm::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kNegative = 1, kUsage = 2 };

/// Runs the `gkm` command line. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when the answer is a mathematical negative (not a
/// spline, no extension), 2 for usage and input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gkm::cli
