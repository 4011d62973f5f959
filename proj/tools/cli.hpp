#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mkvis::cli {

inline constexpr const char* kVersion = "0.1.0";

enum Exit : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kLimit = 3,
};

// Runs one subcommand. args excludes the program name. The JSON report (or
// the edge list for `gen`) goes to out, diagnostics to err; stdin-style
// input is read from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mkvis::cli
