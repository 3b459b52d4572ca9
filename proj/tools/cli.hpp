#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairbot::cli {

// Process exit codes.
inline constexpr int kExitClean = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;
inline constexpr int kExitBudget = 3;

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairbot::cli
