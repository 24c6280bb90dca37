#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpnet::cli {

// Exit statuses shared by the subcommands.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kBudgetError = 3;
inline constexpr int kZeroEvidence = 4;
// `sat` follows SAT solver conventions.
inline constexpr int kSat = 10;
inline constexpr int kUnsat = 20;
inline constexpr int kSatUnknown = 30;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qpnet::cli
