#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellsurf {

inline constexpr int kExitDefinitive = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;

/// Runs one command line (args excludes the program name). Exit status:
/// 0 definitive, 2 unknown within the step bound, 1 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellsurf
