#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace antisym::cli {

/// Process exit statuses.
enum ExitStatus : int { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

/// Runs the command line (args[0] is the program name) and returns the exit
/// status. Reports go to `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a" or "a..b" (inclusive). Throws std::invalid_argument.
std::pair<long, long> parse_range(const std::string& text);

}  // namespace antisym::cli
