#pragma once

// Command-line front end. Kept in the library so tests can drive it
// in-process; tools/latpair.cpp is a thin main around run_cli.

#include <iosfwd>
#include <string>
#include <vector>

namespace latpair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification failure or route disagreement
inline constexpr int kExitUsage = 2;

/// Default size bounds; --unsafe-nmax replaces all of them.
struct Bounds {
  long oracle = 12;      // steps in a brute-force enumeration
  long series = 30;      // truncation degree
  long formula = 2000;   // n for closed forms
  long bijection = 12;   // r + s
  long barrier = 60;     // a + b + x
  long avg = 20000;      // n for the exact average
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latpair::cli
