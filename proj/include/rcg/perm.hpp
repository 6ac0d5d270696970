#pragma once

// Finitely supported permutations of the integers <= n.
//
// A permutation is stored on a window [low..n]; everything outside the
// window is fixed.  The window is trimmed from below so that equal
// functions compare equal no matter how they were built.

#include <map>
#include <vector>

#include "rcg/tableau.hpp"

namespace rcg {

class Permutation {
  public:
    static Permutation identity(int n);
    // images must cover [low..n] completely and bijectively.
    static Permutation from_images(int n, int low, const std::map<int, int>& images);

    int n() const { return n_; }
    // Bottom of the stored window; n()+1 for the identity.
    int low() const { return low_; }
    // w(i); identity outside the window.
    int operator()(int i) const;

    bool is_identity() const { return img_.empty(); }
    // Smallest non-fixed point, or n()+1 for the identity.
    int support_low() const;
    // Largest non-fixed point, or n() for the identity (empty range).
    int support_high() const;

    int length() const;  // inversion count
    Permutation inverse() const;

    // Function comparison, independent of how wide a window either side
    // happens to carry.
    bool operator==(const Permutation& o) const;
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const;

  private:
    Permutation(int n, int low, std::vector<int> img);

    int n_ = 0;
    int low_ = 1;             // low_ > n_ means identity
    std::vector<int> img_;    // img_[i - low_] = w(i)

    friend Permutation operator*(const Permutation& u, const Permutation& v);
    friend Permutation right_transposition(const Permutation& w, int c, int d);
    friend Permutation simple_transposition(int j, int n);
};

// Composition (u*v)(i) = u(v(i)).
Permutation operator*(const Permutation& u, const Permutation& v);

// s_j, swapping j and j+1; requires j <= n-1.
Permutation simple_transposition(int j, int n);

// w * t_{c,d}: swaps the values at positions c and d.
Permutation right_transposition(const Permutation& w, int c, int d);

// The restriction everything here lives under: w(i) > w(i-1) for all i <= 0.
bool is_in_class(const Permutation& w);

// The permutation whose Schubert polynomial is the Schur polynomial of mu:
// unique element of the class with a single ascent at 0, with mu read off
// row by row.  Requires mu to have at most n parts.
Permutation w_of_partition(const Partition& mu, int n);

}  // namespace rcg
