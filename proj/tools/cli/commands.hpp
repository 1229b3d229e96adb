#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace weylchar::cli {

enum ExitCode : int { ok = 0, input_error = 2, consistency_error = 3 };

// Runs one command line (without the program name). Results go to out or
// to --out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylchar::cli
