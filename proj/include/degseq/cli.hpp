#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degseq::cli {

inline constexpr const char* kSchemaVersion = "1.0";
inline constexpr std::size_t kDefaultBudget = 15;

// Exit codes of `test` and `realize`; other commands use 0 / 2.
inline constexpr int kExitGraphical = 0;
inline constexpr int kExitNotGraphical = 1;
inline constexpr int kExitInvalid = 2;

/// Runs the command line `args` (without the program name). Records go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degseq::cli
