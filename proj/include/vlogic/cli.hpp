#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlogic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs one command line (without the program name). A formula argument of
/// "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// `%.12g` rendering used for every float in machine-readable output.
std::string format_number(double x);

}  // namespace vlogic::cli
