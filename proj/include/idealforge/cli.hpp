#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idealforge::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// status: 0 success, 1 bad input, 2 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idealforge::cli
