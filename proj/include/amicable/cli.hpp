#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amicable::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. argv[0] is the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace amicable::cli
