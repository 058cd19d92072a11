#pragma once

#include <iosfwd>

namespace weaknet::cli {

/// Exit codes of the command-line tool.
inline constexpr int kAllPassed = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;

/// Runs one subcommand. The JSON report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weaknet::cli
