#include "rcg/insertion.hpp"

#include <algorithm>
#include <limits>

#include "rcg/error.hpp"
#include "rcg/perm.hpp"

namespace rcg {

namespace {

bool g_selfcheck = true;

// Does the crossing carry strand labels {x, y} (in either order)?
bool has_label_pair(const LabelGrid& g, const Crossing& c, int x, int y) {
    const int fw = g.from_west(c.col, c.row);
    const int fs = g.from_south(c.col, c.row);
    return (fw == x && fs == y) || (fw == y && fs == x);
}

// All crossings of r carrying strand labels {x, y}, except `skip`.
std::vector<Crossing> other_crossings_of_pair(const RcGraph& r, int x, int y,
                                              const Crossing& skip) {
    const LabelGrid g = labels_auto(r);
    std::vector<Crossing> out;
    for (const Crossing& c : r.crossings()) {
        if (c == skip) continue;
        if (has_label_pair(g, c, x, y)) out.push_back(c);
    }
    return out;
}

void check_postconditions(const RcGraph& before, int k,
                          const InsertionResult& res) {
    const std::vector<InsertionStep>& steps = res.trace.steps;
    RCG_CHECK(!steps.empty() && steps.front().row == k,
              "insertion must start in the requested row");
    RCG_CHECK(static_cast<int>(steps.size()) <= before.n(),
              "insertion cascade longer than the number of rows");
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const InsertionStep& s = steps[j];
        RCG_CHECK(s.label_west > 0 && s.label_south <= 0,
                  "insertion labels must straddle zero");
        RCG_CHECK(!s.removed == (j == 0),
                  "exactly the first step lacks a removed crossing");
        if (s.removed) {
            RCG_CHECK(s.removed->row == s.row && s.inserted.col > s.removed->col,
                      "each later step reinserts strictly to the right");
        }
        if (j > 0) {
            RCG_CHECK(s.row > steps[j - 1].row,
                      "cascade rows must strictly increase");
        }
    }
    RCG_CHECK(res.trace.final_c == steps.back().label_west &&
                  res.trace.final_d == steps.back().label_south,
              "final strand labels come from the last step");

    std::vector<int> expected = monomial(before);
    expected[k - 1] += 1;
    RCG_CHECK(monomial(res.result) == expected,
              "insertion must multiply the monomial by x_k");

    const Permutation w = trace(before);
    const Permutation w2 = trace(res.result);
    RCG_CHECK(w2 == right_transposition(w, res.trace.final_c, res.trace.final_d),
              "insertion must compose the trace with one transposition");
    RCG_CHECK(w2.length() == w.length() + 1,
              "insertion must raise the trace length by one");
    RCG_CHECK(is_reduced(res.result), "insertion must preserve reducedness");
    RCG_CHECK(is_in_class(res.result), "insertion must preserve the class");
}

}  // namespace

void set_insertion_selfcheck(bool on) { g_selfcheck = on; }
bool insertion_selfcheck() { return g_selfcheck; }

std::vector<int> open_spaces(const RcGraph& r, int k) {
    if (k < 1 || k > r.n()) throw InputError("row out of range");
    const LabelGrid g = labels_auto(r);
    std::vector<int> out;
    for (int i = g.col_low() + 1; i <= r.n(); ++i) {
        if (r.contains(i, k)) continue;
        if (g.from_west(i, k) > 0 && g.from_south(i, k) <= 0) out.push_back(i);
    }
    return out;
}

InsertionResult insert(const RcGraph& r, int k) {
    if (k < 1 || k > r.n()) throw InputError("inserted number out of range");
    if (!is_reduced(r)) throw InputError("graph is not reduced");
    if (!is_in_class(r)) throw ClassError("trace of the graph is not in class");

    RcGraph cur = r;
    InsertionTrace tr;
    int row = k;
    int lower = std::numeric_limits<int>::min();  // column bound, exclusive
    std::optional<Crossing> removed;
    for (;;) {
        const LabelGrid g = labels_auto(cur);
        int col = 0;
        bool found = false;
        for (int i = std::max(lower == std::numeric_limits<int>::min()
                                  ? g.col_low() + 1
                                  : lower + 1,
                              g.col_low() + 1);
             i <= cur.n(); ++i) {
            if (cur.contains(i, row)) continue;
            if (g.from_west(i, row) > 0 && g.from_south(i, row) <= 0) {
                col = i;
                found = true;
                break;
            }
        }
        RCG_CHECK(found, "no open space to the right of the removed crossing");
        const int a = g.from_west(col, row);
        const int b = g.from_south(col, row);
        const Crossing ins{col, row};
        tr.steps.push_back(InsertionStep{row, removed, ins, a, b});
        cur = cur.with(ins);

        const std::vector<Crossing> twins =
            other_crossings_of_pair(cur, a, b, ins);
        if (twins.empty()) {
            tr.final_c = a;
            tr.final_d = b;
            break;
        }
        RCG_CHECK(twins.size() == 1,
                  "strands of a reduced graph cross at most twice");
        RCG_CHECK(twins[0].row > row, "second crossing must lie in a later row");
        cur = cur.without(twins[0]);
        removed = twins[0];
        row = twins[0].row;
        lower = twins[0].col;
    }

    InsertionResult res{cur, tr};
    if (g_selfcheck) check_postconditions(r, k, res);
    return res;
}

RcGraph insert_word(const RcGraph& r, const Word& v) {
    for (int k : v) {
        if (k < 1 || k > r.n()) throw InputError("word entry out of range");
    }
    RcGraph cur = r;
    for (int k : v) cur = insert(cur, k).result;
    return cur;
}

RcGraph insert_tableau(const RcGraph& r, const Tableau& y) {
    return insert_word(r, reading_word(y));
}

InverseInsertion inverse_insert(const RcGraph& r, int c, int d) {
    if (c <= 0 || d > 0) throw InputError("strand labels must satisfy c > 0 >= d");
    if (c > r.n()) throw InputError("no strand carries the requested label");

    std::vector<Crossing> hits;
    {
        const LabelGrid g = labels_auto(r);
        for (const Crossing& x : r.crossings()) {
            if (has_label_pair(g, x, c, d)) hits.push_back(x);
        }
    }
    if (hits.empty()) throw InputError("the two strands do not cross");
    if (hits.size() > 1) throw InputError("the two strands cross more than once");

    RcGraph cur = r.without(hits[0]);
    int col = hits[0].col;
    int row = hits[0].row;
    for (;;) {
        const LabelGrid g = labels_auto(cur);
        int at = 0;
        bool found = false;
        for (int l = col - 1; l > g.col_low(); --l) {
            if (cur.contains(l, row)) continue;
            if (g.from_west(l, row) <= 0 && g.from_south(l, row) > 0) {
                at = l;
                found = true;
                break;
            }
        }
        if (!found) break;
        const int a = g.from_south(at, row);  // positive
        const int b = g.from_west(at, row);   // nonpositive
        const Crossing ins{at, row};
        cur = cur.with(ins);
        const std::vector<Crossing> twins =
            other_crossings_of_pair(cur, a, b, ins);
        if (twins.size() != 1 || twins[0].row >= row) {
            throw InputError("graph is not the result of an insertion");
        }
        cur = cur.without(twins[0]);
        col = twins[0].col;
        row = twins[0].row;
    }

    InverseInsertion out{cur, row};
    // An inverse is only accepted if running the insertion forward restores
    // the input exactly, with the same final strand labels.
    try {
        const InsertionResult fwd = insert(out.source, out.row);
        if (fwd.result != r || fwd.trace.final_c != c ||
            fwd.trace.final_d != d) {
            throw InputError("graph is not the result of an insertion");
        }
    } catch (const ClassError&) {
        throw InputError("graph is not the result of an insertion");
    }
    return out;
}

}  // namespace rcg
