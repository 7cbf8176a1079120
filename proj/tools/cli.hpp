#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellip::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     // enforce-mode failures or oracle errors in `check`
  kUsage = 2,           // malformed arguments or unknown record id
  kEmptyGrid = 3,       // no grid point satisfies the record's guard
  kDomain = 4,          // argument outside a formula's domain
  kNumerical = 5,       // an oracle failed to converge
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellip::cli
