#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ads::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;  // also: selftest failure
inline constexpr int kNoOptimalTrajectory = 2;

// Runs one `ads_lorentz` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ads::cli
