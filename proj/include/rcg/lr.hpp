#pragma once

// The generalized Littlewood-Richardson engine.  Multiplication of a
// Schubert polynomial by a Schur polynomial is computed by counting
// insertion pairs (R, Y), cross-checkable against the polynomial oracle;
// the one-row case is also computed independently by transposition chains,
// and Jacobi-Trudi determinants reduce general shapes to one-row ones.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rcg/perm.hpp"
#include "rcg/poly.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/tableau.hpp"

namespace rcg {

struct LrChecks {
    // True once the corresponding verification has run and passed; a
    // failed verification throws instead of returning.
    bool u_independence = false;
    bool counting_identity = false;
};

struct LrResult {
    Permutation w;
    Partition mu;
    int n;
    // coefficients[u] = number of pairs (R, Y) inserting to any one fixed
    // result graph with trace u; independent of the choice (checked).
    std::map<Permutation, long long> coefficients;
    // Every result graph U, with the pairs that produced it, in canonical
    // order.
    std::map<RcGraph, std::vector<std::pair<RcGraph, Tableau>>> witnesses;
    LrChecks checks;
};

// Expands schubert(w) * schur(mu) in the Schubert basis by the counting
// rule.  With run_checks the result-graph independence and the counting
// identity are asserted on every call.
LrResult lr_coefficients(const Permutation& w, const Partition& mu, int n,
                         bool run_checks = true);

// One-row case by chain enumeration: all ends w·t_{c_1,d_1}···t_{c_m,d_m}
// with c_i > 0 >= d_i, d_1 > d_2 > ... > d_m, every prefix raising the
// length by exactly one.  Each end is reached by exactly one chain
// (checked), so all multiplicities are 1.
std::map<Permutation, long long> pieri_chains(const Permutation& w, int m,
                                              int n);

// Signed multisets of complete-homogeneous degree sequences, from the
// determinant det(h_{mu_i - i + j}).  Sequences are sorted descending;
// h_0 factors are dropped and any h_{<0} kills the term.
struct JTExpansion {
    std::map<std::vector<int>, long long> plus;
    std::map<std::vector<int>, long long> minus;
};

JTExpansion jacobi_trudi(const Partition& mu);

// Evaluates the signed sum of h-products in n variables; equals
// schur(mu, n) for the expansion of mu (checked by the test suites).
SparsePolynomial evaluate_jacobi_trudi(const JTExpansion& jt, int n);

struct VerifyReport {
    bool pass = false;
    bool polynomial_match = false;
    bool expansion_match = false;
    std::map<Permutation, long long> coefficients;
    SparsePolynomial product;         // schubert(w) * schur(mu)
    SparsePolynomial reconstruction;  // sum of coefficients[u] * schubert(u)
    std::string first_discrepancy;    // empty when pass
};

// Full cross-check of the counting rule against the polynomial oracle.
// Verification failures are report content, not exceptions.
VerifyReport verify_identity(const Permutation& w, const Partition& mu, int n);

}  // namespace rcg
