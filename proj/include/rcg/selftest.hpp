#pragma once

#include <ostream>

namespace rcg {

// Runs the eight acceptance criteria, one PASS/FAIL line each (with the
// runtime against its budget).  Returns 0 when every criterion passes
// within budget, 1 otherwise.
int run_selftest(std::ostream& out);

}  // namespace rcg
