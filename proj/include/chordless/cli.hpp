#ifndef CHORDLESS_CLI_HPP
#define CHORDLESS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chordless::cli {

enum ExitCode : int {
  kOk = 0,
  kFalse = 1,     // property-false verdict or strong-colouring violation
  kRefused = 2,   // non-chordless colour request, oracle cap or budget
  kError = 3,     // usage, I/O or parse failure
  kCoverage = 4,  // colouring file misses an edge
};

/// Environment variable holding the default search-node budget.
inline constexpr const char* kBudgetEnv = "CHORDLESS_BUDGET_NODES";

/// Runs the command line given without the program name. Reports go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordless::cli

#endif  // CHORDLESS_CLI_HPP
