#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pivots::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). The graph is read
// from `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pivots::cli
