#pragma once

// invosc command line: eval, partner, eigenfunction, verify.

#include <iosfwd>
#include <string>
#include <vector>

namespace invosc::cli {

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kConfig = 2,
  kNumeric = 3,
  kSingular = 4,
  kExcludedEps = 5,
};

/// Environment variable consulted for the default verify tolerance.
inline constexpr const char* kTolEnv = "INVOSC_DEFAULT_TOL";

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip-safe text is not wanted here: always 17 significant
/// digits so identical runs give identical bytes.
std::string format_number(double v);

}  // namespace invosc::cli
