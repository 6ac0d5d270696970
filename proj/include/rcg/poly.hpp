#pragma once

// Exact sparse integer polynomials in x_1..x_n, plus Schubert and Schur
// polynomials computed by brute enumeration.  These are the independent
// oracle the combinatorial rules are checked against.

#include <map>
#include <vector>

#include "rcg/perm.hpp"
#include "rcg/tableau.hpp"

namespace rcg {

// Exponent-vector order: lexicographic with e_1 most significant,
// descending.  Forward ladder moves strictly decrease this order, which
// makes the left-justified monomial of a Schubert polynomial extremal.
struct LexDescend {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

class SparsePolynomial {
public:
    using TermMap = std::map<std::vector<int>, long long, LexDescend>;

    explicit SparsePolynomial(int n);
    static SparsePolynomial constant(int n, long long c);
    static SparsePolynomial single(int n, const std::vector<int>& e, long long c);

    int n() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const std::vector<int>& e) const;

    // Adds c·x^e, dropping the term if the total cancels.
    void add_term(const std::vector<int>& e, long long c);

    SparsePolynomial& operator+=(const SparsePolynomial& o);
    SparsePolynomial& operator-=(const SparsePolynomial& o);

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b);
    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b);
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b);
    friend bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b);

private:
    int n_;
    TermMap terms_;
};

// Sum of x^R over the crossing-count fiber of w.  Requires w in class and
// supported within 1..n.
SparsePolynomial schubert(const Permutation& w, int n);

// Sum of x^Y over semistandard tableaux of shape mu with entries in 1..n.
// Zero when mu has more than n rows.
SparsePolynomial schur(const Partition& mu, int n);

// Writes p as a nonnegative integer combination of Schubert polynomials by
// greedy elimination of the lex-max term.  Inputs outside the span are
// rejected.
std::map<Permutation, long long> expand_in_schubert(const SparsePolynomial& p);

}  // namespace rcg
