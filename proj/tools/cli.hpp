#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace inet::cli {

// Runs the `inet` command line. args excludes the program name.
// Returns the process exit status: 0 success, 1 expectation mismatch,
// 2 usage, parse or validation error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace inet::cli
