#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace activity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;

/// Runs one subcommand (nbc, trees, codec, covering, conjecture, verify).
/// `args` excludes the program name. JSON goes to `out`, diagnostics and
/// usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace activity::cli
