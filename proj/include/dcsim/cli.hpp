#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one command line. `args[0]` is the program name. Output files are
/// written through a temporary and renamed into place, so nothing is left
/// behind when the exit status is non-zero.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcsim::cli
