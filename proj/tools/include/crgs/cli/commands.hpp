#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crgs::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kBadFlags = 2,
  kIoError = 3,
  kInvalidValue = 4,
  kOracleLimit = 5,
};

/// Runs one subcommand. `args` excludes the program name. Documents go to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crgs::cli
