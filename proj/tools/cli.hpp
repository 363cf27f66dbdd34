#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torideg::cli {

enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kInputError = 2 };

/// Runs one command line (without the program name). Command output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torideg::cli
