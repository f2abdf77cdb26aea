#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccs::cli {

// Exit-code contract: 0 success, 1 I/O, 2 validation, 3 substrate failure
// exhaustion.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitSubstrate = 3;

// Dispatches a full argv (excluding the program name) to the subcommands:
// validate, route, run, stats, report. Diagnostics go to err, regular output
// to out. Returns the process exit code.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccs::cli
