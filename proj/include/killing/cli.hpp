#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace killing::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

/// Inclusive integer range syntax: "3", "1..5", or "1,2,4".
/// Throws std::invalid_argument on malformed or empty ranges.
std::vector<std::size_t> parse_range(const std::string& text);

/// Runs the command line (args excludes the program name). Everything the
/// command produces goes to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace killing::cli
