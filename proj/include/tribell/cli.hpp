#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tribell::cli {

// Runs the command-line front end. `args` excludes the program name.
// Returns the process exit code: 0 success / all cells pass, 1 reproduce
// failure, 2 usage error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Numeric rendering used for all output: 9 significant digits.
std::string fmt9(double value);

} // namespace tribell::cli
