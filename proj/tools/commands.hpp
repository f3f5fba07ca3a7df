#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace probfrac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitConfig = 3;

// Entry point shared by the executable and the tests. args excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace probfrac::cli
