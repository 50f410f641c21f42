#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blochgeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitNumeric = 3;

/// Runs one command line (without the program name). Output goes to `out`
/// unless --out is given; diagnostics go to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blochgeom::cli
