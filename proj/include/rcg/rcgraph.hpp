#pragma once

// RC-graphs: finite crossing sets drawn on a staircase grid whose columns
// n, n-1, n-2, ... decrease left to right and whose rows n, n-1, ...
// decrease top to bottom.  Strand j enters the west edge of row j and
// leaves through the top edge at column trace(j).  All crossings live in
// rows 1..n and columns <= n; column indices may be arbitrarily negative.

#include <string>
#include <utility>
#include <vector>

#include "rcg/perm.hpp"
#include "rcg/tableau.hpp"

namespace rcg {

struct Crossing {
    int col;  // i
    int row;  // k

    bool operator==(const Crossing& o) const { return col == o.col && row == o.row; }
    bool operator!=(const Crossing& o) const { return !(*this == o); }
    // Canonical order: row ascending, then column descending (west first).
    bool operator<(const Crossing& o) const
    {
        if (row != o.row)
            return row < o.row;
        return col > o.col;
    }
};

class RcGraph {
  public:
    RcGraph(int n, std::vector<Crossing> crossings);
    static RcGraph empty(int n) { return RcGraph(n, {}); }

    int n() const { return n_; }
    const std::vector<Crossing>& crossings() const { return xs_; }
    int size() const { return static_cast<int>(xs_.size()); }
    bool contains(int col, int row) const;

    RcGraph with(Crossing c) const;
    RcGraph without(Crossing c) const;

    bool operator==(const RcGraph& o) const { return n_ == o.n_ && xs_ == o.xs_; }
    bool operator!=(const RcGraph& o) const { return !(*this == o); }
    bool operator<(const RcGraph& o) const;

  private:
    int n_;
    std::vector<Crossing> xs_;  // canonically sorted, duplicate-free
};

// Rectangular window of tiles: columns [col_low..n], rows [row_low..n].
struct Window {
    int col_low;
    int row_low;
};

// Strand labels entering each tile of a window from the west and from the
// south.  Valid whenever the window contains every crossing with margin
// >= 1 and no displaced strand touches the east boundary.
class LabelGrid {
  public:
    static LabelGrid compute(const RcGraph& r, Window w);

    int n() const { return n_; }
    int col_low() const { return col_low_; }
    int row_low() const { return row_low_; }
    int from_west(int col, int row) const;
    int from_south(int col, int row) const;

  private:
    friend LabelGrid labels_auto(const RcGraph& r);
    LabelGrid() = default;
    static LabelGrid sweep(const RcGraph& r, Window w);
    std::size_t idx(int col, int row) const;

    int n_ = 0;
    int col_low_ = 0;
    int row_low_ = 0;
    std::vector<int> west_, south_;
};

// Sweep labels over a window chosen automatically so that every crossing
// fits with margin and the east boundary is undisturbed staircase.  The
// column span is capped by RCG_MAX_WINDOW (default 64).
LabelGrid labels_auto(const RcGraph& r);

// The permutation traced by the strands.  Works for any crossing set.
Permutation trace(const RcGraph& r);

// |crossings| == length(trace)  (no two strands cross twice).
bool is_reduced(const RcGraph& r);

// No two strands with nonpositive start rows cross, i.e. trace is in class.
bool is_in_class(const RcGraph& r);

// Letter j = col + row - n - 1 per crossing; rows top (k = n) to bottom,
// right to left (column ascending) within a row.  Reduced word of trace.
Word reading_word(const RcGraph& r);

// Compose a word of letters into a permutation, leftmost letter outermost.
Permutation word_to_perm(const Word& word, int n);

// Exponent of x_k = number of crossings in row k, for k = 1..n.
std::vector<int> monomial(const RcGraph& r);

struct LadderMove {
    Crossing from;  // (i, k-l), deleted
    Crossing to;    // (i-1, k), inserted
    int size;       // l >= 1
};

// All forward ladder moves applicable to r, with their results.
std::vector<std::pair<RcGraph, LadderMove>> ladder_moves(const RcGraph& r);

// Every row's crossings occupy columns n, n-1, ... contiguously.
bool is_left_justified(const RcGraph& r);

// All rc-graphs with the given trace (requires w in class, window <= n).
// Computed twice independently -- row-wise backtracking and the ladder-move
// closure of the top element -- and the two answers are checked equal.
std::vector<RcGraph> enumerate_rcgraphs(const Permutation& w, int n);

// The unique left-justified rc-graph of w (lexicographically largest
// monomial).
RcGraph top_rcgraph(const Permutation& w, int n);

// Left-justified graph of a partition: row k holds mu_k crossings at
// columns n, n-1, ..., n-mu_k+1.  This is the top rc-graph of
// w_of_partition(mu, n).
RcGraph rcgraph_of_partition(const Partition& mu, int n);

// The shape-preserving bijection between SSYT of shape mu (entries <= n)
// and rc-graphs with trace w_of_partition(mu, n): the box in diagram row
// r, column c with entry e maps to the crossing (n - c + 1 + r - e, e).
RcGraph rcgraph_of_tableau(const Tableau& y, int n);
Tableau tableau_of_rcgraph(const RcGraph& r);

// ASCII picture: header of column labels, one line per row n..1, '+' for
// a crossing and '.' for an empty tile.
std::string render(const RcGraph& r);
RcGraph parse_render(const std::string& text);

}  // namespace rcg
