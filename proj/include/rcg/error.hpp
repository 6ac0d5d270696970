#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

// Malformed or out-of-range input.  The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violation of the standing restriction on permutations/rc-graphs
// (increasing on nonpositive positions, reducedness preconditions).
// The CLI maps this to exit code 3.
struct ClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure: reaching this is a bug, not a legal state.
[[noreturn]] inline void check_failed(const std::string& msg)
{
    throw std::logic_error("internal check failed: " + msg);
}

}  // namespace rcg

#define RCG_CHECK(cond, msg)                            \
    do {                                                \
        if (!(cond)) ::rcg::check_failed(msg);          \
    } while (0)
