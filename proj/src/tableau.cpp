#include "rcg/tableau.hpp"

#include <algorithm>

#include "rcg/error.hpp"

namespace rcg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InputError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InputError("partition parts must weakly decrease");
    }
}

int Partition::part(int r) const
{
    if (r < 1)
        throw InputError("partition row index must be >= 1");
    return r <= rows() ? parts_[r - 1] : 0;
}

int Partition::size() const
{
    int s = 0;
    for (int p : parts_)
        s += p;
    return s;
}

Tableau::Tableau(int n, std::vector<std::vector<int>> rows) : n_(n), rows_(std::move(rows))
{
    if (n_ < 0)
        throw InputError("tableau entry bound must be >= 0");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty())
            throw InputError("tableau rows must be nonempty");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw InputError("tableau shape must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n_)
                throw InputError("tableau entry out of range 1..n");
            if (c > 0 && row[c] < row[c - 1])
                throw InputError("tableau rows must weakly increase");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw InputError("tableau columns must strictly increase");
        }
    }
}

int Tableau::box_count() const
{
    int s = 0;
    for (const auto& row : rows_)
        s += static_cast<int>(row.size());
    return s;
}

Partition Tableau::shape() const
{
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_)
        parts.push_back(static_cast<int>(row.size()));
    return Partition(parts);
}

std::vector<int> Tableau::weight() const
{
    std::vector<int> e(static_cast<std::size_t>(n_), 0);
    for (const auto& row : rows_)
        for (int x : row)
            ++e[static_cast<std::size_t>(x - 1)];
    return e;
}

bool Tableau::operator<(const Tableau& o) const
{
    if (n_ != o.n_)
        return n_ < o.n_;
    return rows_ < o.rows_;
}

Word reading_word(const Tableau& y)
{
    Word w;
    const auto& rows = y.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

namespace {

void fill_ssyt(const Partition& mu, int n, int r, int c,
               std::vector<std::vector<int>>& acc, std::vector<Tableau>& out)
{
    if (r == mu.rows()) {
        out.emplace_back(n, acc);
        return;
    }
    if (c == mu.part(r + 1)) {
        fill_ssyt(mu, n, r + 1, 0, acc, out);
        return;
    }
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, acc[r][c - 1]);            // weak along the row
    if (r > 0)
        lo = std::max(lo, acc[r - 1][c] + 1);        // strict down the column
    for (int v = lo; v <= n; ++v) {
        acc[r].push_back(v);
        fill_ssyt(mu, n, r, c + 1, acc, out);
        acc[r].pop_back();
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& mu, int n)
{
    std::vector<Tableau> out;
    if (mu.rows() > n)
        return out;
    std::vector<std::vector<int>> acc(static_cast<std::size_t>(mu.rows()));
    fill_ssyt(mu, n, 0, 0, acc, out);
    return out;
}

Tableau schensted_insert(const Tableau& y, int k)
{
    if (k < 1 || k > y.n())
        throw InputError("inserted entry out of range 1..n");
    auto rows = y.rows();
    int x = k;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            break;
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            break;
        }
        std::swap(*it, x);  // bump the leftmost entry > x into the next row
    }
    return Tableau(y.n(), rows);
}

Tableau insert_tableau(const Tableau& y1, const Tableau& y2)
{
    if (y1.n() != y2.n())
        throw InputError("tableau entry bounds differ");
    Tableau acc = y1;
    for (int x : reading_word(y2))
        acc = schensted_insert(acc, x);
    return acc;
}

std::set<Word> knuth_neighbors(const Word& w)
{
    std::set<Word> out;
    for (std::size_t t = 0; t + 2 < w.size(); ++t) {
        const int p = w[t], q = w[t + 1], r = w[t + 2];
        auto emit = [&](int a, int b, int c) {
            Word v = w;
            v[t] = a;
            v[t + 1] = b;
            v[t + 2] = c;
            out.insert(v);
        };
        // yxz -> yzx with x < y <= z, and its reverse.
        if (q < p && p <= r)
            emit(p, r, q);
        if (r < p && p <= q)
            emit(p, r, q);
        // xzy -> zxy with x <= y < z, and its reverse.
        if (p <= r && r < q)
            emit(q, p, r);
        if (q <= r && r < p)
            emit(q, p, r);
    }
    return out;
}

Tableau rectify(const Word& v, int n)
{
    Tableau acc = Tableau::empty(n);
    for (int x : v)
        acc = schensted_insert(acc, x);
    return acc;
}

}  // namespace rcg
