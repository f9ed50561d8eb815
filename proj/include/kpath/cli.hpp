#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpath::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // non-member, invalid certificate, counterexample
inline constexpr int kUsage = 2;     // usage or format error
inline constexpr int kBudget = 3;    // resource budget exceeded

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kpath::cli
