#pragma once

#include <ostream>

namespace gpscale {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitNumerical = 2 };

/// Parses argv, runs one subcommand (mle-curve, cubature-curve, geometry,
/// eval, rates) and returns the exit code. Results go to `out` unless --out
/// names a file; diagnostics and usage go to `err`.
int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpscale
