#pragma once

// Partitions, semistandard Young tableaux and Knuth equivalence of words.

#include <set>
#include <vector>

namespace rcg {

// Weakly decreasing sequence of positive integers; may be empty.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int rows() const { return static_cast<int>(parts_.size()); }
    // 1-based part access; rows beyond the last have size 0.
    int part(int r) const;
    int size() const;  // number of boxes
    const std::vector<int>& parts() const { return parts_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

using Word = std::vector<int>;

// Semistandard Young tableau with entries in 1..n: rows weakly increase
// left to right, columns strictly increase top to bottom.
class Tableau {
  public:
    Tableau(int n, std::vector<std::vector<int>> rows);
    static Tableau empty(int n) { return Tableau(n, {}); }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int box_count() const;
    Partition shape() const;
    // e_k = number of entries equal to k, for k = 1..n.
    std::vector<int> weight() const;

    bool operator==(const Tableau& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return !(*this == o); }
    bool operator<(const Tableau& o) const;

  private:
    int n_;
    std::vector<std::vector<int>> rows_;
};

// Row word: rows bottom to top, each row left to right.
Word reading_word(const Tableau& y);

// All SSYT of the given shape with entries <= n, in a fixed deterministic
// order.  Empty when the shape has more than n rows.
std::vector<Tableau> enumerate_ssyt(const Partition& mu, int n);

// Classical Schensted row insertion of a single entry.
Tableau schensted_insert(const Tableau& y, int k);

// Insert y2 into y1 by Schensted-inserting the row word of y2.
Tableau insert_tableau(const Tableau& y1, const Tableau& y2);

// Words reachable from w by a single elementary Knuth move:
//   yxz ~ yzx  (x < y <= z)     xzy ~ zxy  (x <= y < z).
std::set<Word> knuth_neighbors(const Word& w);

// Insertion tableau of a word (letters in 1..n).
Tableau rectify(const Word& v, int n);

}  // namespace rcg
