#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polycc::cli {

// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;     // fail or no-solution verdict
inline constexpr int kExitInvalid = 2;  // bad input, degenerate parameters, unwritable paths

/// Parses an angle argument: a radian literal, "pi", "pi/<k>", or the
/// tokens "pi/N" / "pi/2N" with N substituted by n_gon; optional leading
/// sign. Rational multiples of pi are exact to 1 ulp.
double parse_angle(const std::string& text, int n_gon);

/// Runs one command (args exclude the program name) and writes the run
/// record to out, diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycc::cli
