#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ratgamma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRegion = 3;

// Runs the tool on argv-style arguments (without the program name), writing
// tables to out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratgamma::cli
