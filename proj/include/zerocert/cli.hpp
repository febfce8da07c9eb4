#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zerocert {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNoConclusion = 2;
inline constexpr int kExitZeroOnBoundary = 3;
inline constexpr int kExitInputError = 4;
inline constexpr int kExitInternal = 5;

/// Runs the command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zerocert
