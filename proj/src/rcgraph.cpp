#include "rcg/rcgraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "rcg/error.hpp"

namespace rcg {

namespace {

int max_window_width()
{
    const char* env = std::getenv("RCG_MAX_WINDOW");
    if (env == nullptr || *env == '\0')
        return 64;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v <= 0 || v > 1000000)
        throw InputError("RCG_MAX_WINDOW must be a positive integer");
    return static_cast<int>(v);
}

// Label leaving through the top edge at the given column.
int north_exit(const RcGraph& r, const LabelGrid& g, int col)
{
    return r.contains(col, r.n()) ? g.from_south(col, r.n()) : g.from_west(col, r.n());
}

}  // namespace

RcGraph::RcGraph(int n, std::vector<Crossing> crossings) : n_(n), xs_(std::move(crossings))
{
    if (n_ < 1)
        throw InputError("rc-graph size must be positive");
    for (const Crossing& c : xs_) {
        if (c.row < 1 || c.row > n_)
            throw InputError("crossing row out of range 1..n");
        if (c.col > n_)
            throw InputError("crossing column exceeds n");
    }
    std::sort(xs_.begin(), xs_.end());
    if (std::adjacent_find(xs_.begin(), xs_.end()) != xs_.end())
        throw InputError("duplicate crossing");
}

bool RcGraph::contains(int col, int row) const
{
    return std::binary_search(xs_.begin(), xs_.end(), Crossing{col, row});
}

RcGraph RcGraph::with(Crossing c) const
{
    std::vector<Crossing> xs = xs_;
    xs.push_back(c);
    return RcGraph(n_, std::move(xs));  // rejects duplicates
}

RcGraph RcGraph::without(Crossing c) const
{
    std::vector<Crossing> xs = xs_;
    const auto it = std::find(xs.begin(), xs.end(), c);
    if (it == xs.end())
        throw InputError("no such crossing");
    xs.erase(it);
    return RcGraph(n_, std::move(xs));
}

bool RcGraph::operator<(const RcGraph& o) const
{
    if (n_ != o.n_)
        return n_ < o.n_;
    return xs_ < o.xs_;
}

std::size_t LabelGrid::idx(int col, int row) const
{
    RCG_CHECK(col >= col_low_ && col <= n_ && row >= row_low_ && row <= n_,
              "label lookup outside the window");
    const int width = n_ - col_low_ + 1;
    return static_cast<std::size_t>(row - row_low_) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(n_ - col);
}

int LabelGrid::from_west(int col, int row) const { return west_[idx(col, row)]; }
int LabelGrid::from_south(int col, int row) const { return south_[idx(col, row)]; }

// Bottom-up, west-to-east transport of strand labels.  The south edge of
// the bottom row and the west edge of the whole window are crossing-free,
// so they carry the undisturbed labels row+col-n-1 and row respectively.
LabelGrid LabelGrid::sweep(const RcGraph& r, Window w)
{
    LabelGrid g;
    g.n_ = r.n();
    g.col_low_ = w.col_low;
    g.row_low_ = w.row_low;
    RCG_CHECK(w.col_low <= g.n_ && w.row_low <= g.n_, "empty label window");
    const std::size_t cells = static_cast<std::size_t>(g.n_ - w.col_low + 1) *
                              static_cast<std::size_t>(g.n_ - w.row_low + 1);
    g.west_.assign(cells, 0);
    g.south_.assign(cells, 0);
    for (int k = w.row_low; k <= g.n_; ++k) {
        for (int i = g.n_; i >= w.col_low; --i) {
            // a crossing passes south->north and west->east; a bump turns
            const int fs = (k == w.row_low)
                               ? i + w.row_low - g.n_ - 1
                               : (r.contains(i, k - 1) ? g.from_south(i, k - 1)
                                                       : g.from_west(i, k - 1));
            const int fw = (i == g.n_) ? k
                                       : (r.contains(i + 1, k) ? g.from_west(i + 1, k)
                                                               : g.from_south(i + 1, k));
            g.south_[g.idx(i, k)] = fs;
            g.west_[g.idx(i, k)] = fw;
        }
    }
    return g;
}

LabelGrid LabelGrid::compute(const RcGraph& r, Window w)
{
    if (w.row_low > 1)
        throw InputError("label window must include row 1");
    for (const Crossing& c : r.crossings())
        if (c.col <= w.col_low)
            throw InputError("label window must end east of every crossing");
    LabelGrid g = sweep(r, w);
    for (int k = w.row_low; k <= r.n(); ++k)
        if (g.from_south(w.col_low, k) != w.col_low + k - r.n() - 1)
            throw InputError("label window too narrow: a displaced strand reaches its east edge");
    return g;
}

LabelGrid labels_auto(const RcGraph& r)
{
    const int n = r.n();
    const int cap = max_window_width();
    int min_col = n + 1;
    for (const Crossing& c : r.crossings())
        min_col = std::min(min_col, c.col);
    int col_low = std::min(0, min_col - 1) - 1;
    for (;;) {
        if (n - col_low + 1 > cap)
            throw InputError("crossing set needs a label window wider than RCG_MAX_WINDOW");
        LabelGrid g = LabelGrid::sweep(r, {col_low, 1});
        bool undisturbed = true;
        for (int k = 1; k <= n && undisturbed; ++k)
            undisturbed = g.from_south(col_low, k) == col_low + k - n - 1;
        if (!undisturbed) {
            --col_low;
            continue;
        }
        // Widen until the boundary column is east of every displaced
        // strand, so that no open space can hide east of the window.
        int slow = n + 1;
        for (int i = col_low; i <= n; ++i) {
            const int j = north_exit(r, g, i);
            if (j != i)
                slow = std::min(slow, std::min(i, j));
        }
        if (col_low <= slow - 2)
            return g;
        col_low = slow - 2;
    }
}

Permutation trace(const RcGraph& r)
{
    const LabelGrid g = labels_auto(r);
    std::map<int, int> images;  // entering label -> exit column
    for (int i = g.col_low(); i <= r.n(); ++i)
        images[north_exit(r, g, i)] = i;
    return Permutation::from_images(r.n(), g.col_low(), images);
}

bool is_reduced(const RcGraph& r) { return r.size() == trace(r).length(); }

bool is_in_class(const RcGraph& r) { return is_in_class(trace(r)); }

Word reading_word(const RcGraph& r)
{
    Word w;
    w.reserve(r.crossings().size());
    // canonical storage is row-ascending, column-descending, so reversing
    // it walks rows top to bottom with columns ascending inside each row
    const auto& xs = r.crossings();
    for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        w.push_back(it->col + it->row - r.n() - 1);
    return w;
}

Permutation word_to_perm(const Word& word, int n)
{
    if (n < 1)
        throw InputError("n must be positive");
    Permutation acc = Permutation::identity(n);
    for (const int j : word) {
        if (j > n - 1)
            throw InputError("word letter exceeds n-1");
        acc = acc * simple_transposition(j, n);
    }
    return acc;
}

std::vector<int> monomial(const RcGraph& r)
{
    std::vector<int> e(static_cast<std::size_t>(r.n()), 0);
    for (const Crossing& c : r.crossings())
        ++e[static_cast<std::size_t>(c.row - 1)];
    return e;
}

std::vector<std::pair<RcGraph, LadderMove>> ladder_moves(const RcGraph& r)
{
    std::vector<std::pair<RcGraph, LadderMove>> out;
    for (const Crossing& c : r.crossings()) {
        if (r.contains(c.col - 1, c.row))
            continue;
        for (int t = 1; c.row + t <= r.n(); ++t) {
            const bool a = r.contains(c.col, c.row + t);
            const bool b = r.contains(c.col - 1, c.row + t);
            if (!a && !b) {
                const LadderMove m{c, {c.col - 1, c.row + t}, t};
                out.emplace_back(r.without(m.from).with(m.to), m);
                break;  // taller ladders from the same crossing need this pair filled
            }
            if (!(a && b))
                break;
        }
    }
    return out;
}

bool is_left_justified(const RcGraph& r)
{
    const auto& xs = r.crossings();
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (t == 0 || xs[t - 1].row != xs[t].row) {
            if (xs[t].col != r.n())
                return false;
        } else if (xs[t - 1].col != xs[t].col + 1) {
            return false;
        }
    }
    return true;
}

namespace {

void validate_enumeration_args(const Permutation& w, int n)
{
    if (n < 1)
        throw InputError("n must be positive");
    if (!is_in_class(w))
        throw ClassError("permutation is not in the class");
    if (!w.is_identity() && w.support_high() > n)
        throw InputError("permutation moves integers above n");
}

// Row-wise backtracking: peel the reading word off the front, one row at a
// time.  Each crossing in row k at column i contributes the letter
// i+k-n-1 <= k-1; within a row letters ascend, and each peeled letter must
// shorten the remainder, i.e. be a left descent.
struct Backtracker {
    int n = 0;
    std::vector<Crossing> acc;
    std::vector<RcGraph> out;

    void rows(int k, const Permutation& u)
    {
        if (u.is_identity()) {
            out.emplace_back(n, acc);  // all remaining rows stay empty
            return;
        }
        if (k == 0)
            return;
        // rows 1..k can hold at most sum_r max(0, r - slow) crossings,
        // and peeling never lowers the support
        const int slow = u.support_low();
        long capacity = 0;
        for (int row = 1; row <= k; ++row)
            if (row > slow)
                capacity += row - slow;
        if (u.length() > capacity)
            return;
        letters(k, slow, u);
    }

    void letters(int k, int j_min, const Permutation& u)
    {
        rows(k - 1, u);  // close this row
        const Permutation ui = u.inverse();
        for (int j = std::max(j_min, u.support_low()); j <= k - 1; ++j) {
            if (ui(j) <= ui(j + 1))
                continue;  // not a left descent
            acc.push_back({j - k + n + 1, k});
            letters(k, j + 1, simple_transposition(j, n) * u);
            acc.pop_back();
        }
    }
};

std::vector<RcGraph> backtrack_all(const Permutation& w, int n)
{
    Backtracker b;
    b.n = n;
    b.rows(n, w);
    std::sort(b.out.begin(), b.out.end());
    return b.out;
}

const RcGraph& unique_left_justified(const std::vector<RcGraph>& all)
{
    const RcGraph* top = nullptr;
    for (const RcGraph& r : all) {
        if (is_left_justified(r)) {
            RCG_CHECK(top == nullptr, "left-justified rc-graph is not unique");
            top = &r;
        }
    }
    RCG_CHECK(top != nullptr, "no left-justified rc-graph found");
    return *top;
}

}  // namespace

std::vector<RcGraph> enumerate_rcgraphs(const Permutation& w, int n)
{
    validate_enumeration_args(w, n);
    std::vector<RcGraph> all = backtrack_all(w, n);
    // independent cross-check: the same set must arise as the ladder-move
    // closure of its unique left-justified element
    std::set<RcGraph> closure{unique_left_justified(all)};
    std::vector<RcGraph> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
        const RcGraph cur = std::move(frontier.back());
        frontier.pop_back();
        for (const auto& [next, move] : ladder_moves(cur)) {
            (void)move;
            if (closure.insert(next).second)
                frontier.push_back(next);
        }
    }
    RCG_CHECK(closure.size() == all.size() &&
                  std::equal(closure.begin(), closure.end(), all.begin()),
              "ladder-move closure disagrees with row-wise enumeration");
    return all;
}

RcGraph top_rcgraph(const Permutation& w, int n)
{
    validate_enumeration_args(w, n);
    const std::vector<RcGraph> all = backtrack_all(w, n);
    return unique_left_justified(all);
}

RcGraph rcgraph_of_partition(const Partition& mu, int n)
{
    if (mu.rows() > n)
        throw InputError("partition has more rows than n");
    std::vector<Crossing> xs;
    for (int k = 1; k <= mu.rows(); ++k)
        for (int i = n; i >= n - mu.part(k) + 1; --i)
            xs.push_back({i, k});
    return RcGraph(n, std::move(xs));
}

RcGraph rcgraph_of_tableau(const Tableau& y, int n)
{
    std::vector<Crossing> xs;
    const auto& rows = y.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            const int e = rows[r][c];
            if (e > n)
                throw InputError("tableau entry exceeds n");
            xs.push_back({n - static_cast<int>(c + 1) + 1 + static_cast<int>(r + 1) - e, e});
        }
    }
    return RcGraph(n, std::move(xs));
}

Tableau tableau_of_rcgraph(const RcGraph& r)
{
    const int n = r.n();
    const Permutation w = trace(r);
    if (!is_in_class(w))
        throw ClassError("trace is not in the class");
    // candidate shape: row k of the left-justified graph of w holds
    // #{j < k : w(j) > w(k)} crossings
    std::vector<int> parts;
    for (int k = 1; k <= n; ++k) {
        int m = 0;
        for (int j = std::min(w.low(), w(k)); j < k; ++j)
            if (w(j) > w(k))
                ++m;
        parts.push_back(m);
    }
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t t = 1; t < parts.size(); ++t)
        if (parts[t] > parts[t - 1])
            throw InputError("trace is not the permutation of a partition");
    const Partition mu(parts);
    if (w != w_of_partition(mu, n))
        throw InputError("trace is not the permutation of a partition");
    // crossings with letter d fill the boxes on diagonal row-col = d,
    // entries (= crossing rows) increasing down the diagonal
    std::map<int, std::vector<int>> entries_by_letter;
    for (const Crossing& c : r.crossings())
        entries_by_letter[c.col + c.row - n - 1].push_back(c.row);
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(mu.rows()));
    for (int row = 1; row <= mu.rows(); ++row)
        grid[static_cast<std::size_t>(row - 1)].assign(static_cast<std::size_t>(mu.part(row)), 0);
    for (auto& [d, es] : entries_by_letter) {
        std::sort(es.begin(), es.end());
        std::vector<std::pair<int, int>> boxes;
        for (int row = 1; row <= mu.rows(); ++row) {
            const int col = row - d;
            if (col >= 1 && col <= mu.part(row))
                boxes.emplace_back(row, col);
        }
        RCG_CHECK(boxes.size() == es.size(), "diagonal box count does not match crossings");
        for (std::size_t t = 0; t < es.size(); ++t)
            grid[static_cast<std::size_t>(boxes[t].first - 1)]
                [static_cast<std::size_t>(boxes[t].second - 1)] = es[t];
    }
    for (const auto& row : grid)
        for (const int e : row)
            RCG_CHECK(e > 0, "unfilled box after diagonal assignment");
    return Tableau(n, std::move(grid));
}

std::string render(const RcGraph& r)
{
    const int n = r.n();
    int c_low = 1;
    for (const Crossing& c : r.crossings())
        c_low = std::min(c_low, c.col);
    int cell = 1;
    for (int i = n; i >= c_low; --i)
        cell = std::max(cell, static_cast<int>(std::to_string(i).size()));
    const int label = static_cast<int>(std::to_string(n).size());
    std::ostringstream os;
    os << std::string(static_cast<std::size_t>(label), ' ') << " |";
    for (int i = n; i >= c_low; --i)
        os << ' ' << std::setw(cell) << i;
    os << '\n';
    for (int k = n; k >= 1; --k) {
        os << std::setw(label) << k << " |";
        for (int i = n; i >= c_low; --i)
            os << ' ' << std::setw(cell) << (r.contains(i, k) ? '+' : '.');
        os << '\n';
    }
    return os.str();
}

RcGraph parse_render(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<int> cols;
    std::vector<std::pair<int, std::vector<char>>> rows;  // (label, cells)
    bool have_header = false;
    while (std::getline(in, line)) {
        const std::size_t mark = line.find('|');
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (mark == std::string::npos)
            throw InputError("picture line lacks the '|' separator: " + line);
        std::istringstream left(line.substr(0, mark));
        std::istringstream right(line.substr(mark + 1));
        int label = 0;
        if (left >> label) {
            std::vector<char> cells;
            char ch = 0;
            while (right >> ch) {
                if (ch != '+' && ch != '.')
                    throw InputError("bad picture cell: " + std::string(1, ch));
                cells.push_back(ch);
            }
            rows.emplace_back(label, std::move(cells));
        } else {
            if (have_header)
                throw InputError("picture has two header lines");
            have_header = true;
            int col = 0;
            while (right >> col)
                cols.push_back(col);
            if (right.fail() && !right.eof())
                throw InputError("bad picture header: " + line);
        }
    }
    if (!have_header || rows.empty())
        throw InputError("picture needs a column header and rows n..1");
    for (std::size_t t = 1; t < cols.size(); ++t)
        if (cols[t] != cols[t - 1] - 1)
            throw InputError("picture columns must descend consecutively");
    const int n = rows.front().first;
    if (cols.empty() || cols.front() != n || static_cast<int>(rows.size()) != n)
        throw InputError("picture must cover columns n.. and rows n..1");
    std::vector<Crossing> xs;
    for (std::size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].first != n - static_cast<int>(t))
            throw InputError("picture rows must be labelled n..1");
        if (rows[t].second.size() != cols.size())
            throw InputError("picture row width disagrees with the header");
        for (std::size_t c = 0; c < rows[t].second.size(); ++c)
            if (rows[t].second[c] == '+')
                xs.push_back({cols[c], rows[t].first});
    }
    return RcGraph(n, std::move(xs));
}

}  // namespace rcg
