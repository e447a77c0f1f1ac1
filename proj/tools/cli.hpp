#pragma once

#include <iosfwd>

namespace eca::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,  ///< bad flags or parameter values
  kDataError = 2,   ///< input files that cannot be read or analysed
};

/// Runs `eca <subcommand> ...` with argv[0] being the program name.
/// Subcommands: binarize, convert, eca, plot.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eca::cli
