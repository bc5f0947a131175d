#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace atlas::cli {

/// Parses and executes one command line (without the program name).
/// Exit status: 0 success, 1 domain error, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace atlas::cli
