#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Returns the process exit code; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlf::cli
