#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prlab::cli {

/// Exit statuses shared by every verb.
enum Exit : int { kPositive = 0, kNegative = 1, kUnknown = 2, kUsage = 3 };

/// Runs one command line (without the program name). Human-readable or JSON output
/// goes to `out`, diagnostics to `err`. Returns the exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prlab::cli
