#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fabric::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitUsage = 2;

// Runs the fabric-est flag pipeline. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fabric::cli
