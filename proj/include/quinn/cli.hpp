#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quinn::cli {

/// Runs one quinncalc command line (without the program name).
/// Exit codes: 0 success or equal, 1 failed check, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quinn::cli
