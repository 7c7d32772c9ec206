#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blancmange::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitUsage = 2;

// Largest k accepted by dilation-csv (2^24 + 1 rows).
inline constexpr unsigned kMaxCsvK = 24;

// Runs one invocation. args excludes the program name. Results go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blancmange::cli
