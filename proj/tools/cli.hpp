#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slnchar::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kResource = 3,
  kMalformed = 4,
};

/// Runs one command line (args excludes the program name). Everything the
/// command produces goes to out unless --out is given; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace slnchar::cli
