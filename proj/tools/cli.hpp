#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadsg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitUsage = 64;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadsg::cli
