#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace neumaier::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifiedFalse = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kInternal = 3;
inline constexpr int kBudget = 4;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace neumaier::cli
