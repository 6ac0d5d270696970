#pragma once

// Generalized row insertion on rc-graphs.  Inserting a number k adds one
// crossing in row k at the smallest open space; if the two strands that
// now cross also cross somewhere above, that second crossing is removed
// and the insertion cascades into its row.  The net effect multiplies the
// monomial by x_k and composes the permutation with one transposition
// s_{c,d}, c > 0 >= d.

#include <optional>
#include <vector>

#include "rcg/rcgraph.hpp"

namespace rcg {

struct InsertionStep {
    int row;                          // k_j
    std::optional<Crossing> removed;  // (l_j, k_j); absent on the first step
    Crossing inserted;                // (i_j, k_j), i_j > l_j
    int label_west;                   // a_j > 0
    int label_south;                  // b_j <= 0
};

struct InsertionTrace {
    std::vector<InsertionStep> steps;
    int final_c;  // label_west of the last step
    int final_d;  // label_south of the last step
};

struct InsertionResult {
    RcGraph result;
    InsertionTrace trace;
};

// Columns i with (i,k) not in R whose west label is positive and south
// label nonpositive, in ascending order.  Always a finite list.
std::vector<int> open_spaces(const RcGraph& r, int k);

// R <- k.  Requires R in class and 1 <= k <= n.
InsertionResult insert(const RcGraph& r, int k);

// Left fold of insert over the letters (each in 1..n).
RcGraph insert_word(const RcGraph& r, const Word& v);

// R <- Y inserts the reading word of Y.
RcGraph insert_tableau(const RcGraph& r, const Tableau& y);

struct InverseInsertion {
    RcGraph source;
    int row;  // the k with insert(source, k) reproducing the input
};

// Undo one insertion given the final strand labels (c, d).  The pair must
// cross exactly once and the walk back must reach a genuine preimage;
// anything else is rejected as invalid input.
InverseInsertion inverse_insert(const RcGraph& r, int c, int d);

// Toggle the per-call postcondition checks (monomial, trace, class,
// reducedness).  On by default; the test suites rely on them.
void set_insertion_selfcheck(bool on);
bool insertion_selfcheck();

}  // namespace rcg
