#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcg {

// Dispatches one command-line invocation (argv without the program name).
// Reads stdin only for `render --parse`.  Exit codes: 0 success, 1
// verification failure, 2 invalid input, 3 class violation.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace rcg
