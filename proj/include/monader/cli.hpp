#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monader {

// Entry point of the monader command-line tool. `args` excludes the program
// name. Exit status: 0 success, 1 oracle mismatch, 2 usage, parse or
// validation error, 3 improper expression.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monader
