#include "rcg/poly.hpp"

#include <algorithm>
#include <climits>

#include "rcg/error.hpp"
#include "rcg/rcgraph.hpp"

namespace rcg {

namespace {

long long checked_add(long long a, long long b) {
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw InputError("coefficient overflow");
    }
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw InputError("coefficient overflow");
    }
    return out;
}

}  // namespace

bool LexDescend::operator()(const std::vector<int>& a,
                            const std::vector<int>& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePolynomial::SparsePolynomial(int n) : n_(n) {
    if (n < 0) throw InputError("negative variable count");
}

SparsePolynomial SparsePolynomial::constant(int n, long long c) {
    SparsePolynomial p(n);
    p.add_term(std::vector<int>(n, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::single(int n, const std::vector<int>& e,
                                          long long c) {
    SparsePolynomial p(n);
    p.add_term(e, c);
    return p;
}

long long SparsePolynomial::coefficient(const std::vector<int>& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void SparsePolynomial::add_term(const std::vector<int>& e, long long c) {
    if (static_cast<int>(e.size()) != n_) {
        throw InputError("exponent vector has the wrong length");
    }
    for (int x : e) {
        if (x < 0) throw InputError("negative exponent");
    }
    if (c == 0) return;
    const auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& o) {
    if (o.n_ != n_) throw InputError("mixed variable counts");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& o) {
    if (o.n_ != n_) throw InputError("mixed variable counts");
    for (const auto& [e, c] : o.terms_) {
        if (c == LLONG_MIN) throw InputError("coefficient overflow");
        add_term(e, -c);
    }
    return *this;
}

SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    a += b;
    return a;
}

SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    a -= b;
    return a;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.n_ != b.n_) throw InputError("mixed variable counts");
    SparsePolynomial out(a.n_);
    std::vector<int> e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int t = 0; t < a.n_; ++t) {
                if (ea[t] > INT_MAX - eb[t]) throw InputError("exponent overflow");
                e[t] = ea[t] + eb[t];
            }
            out.add_term(e, checked_mul(ca, cb));
        }
    }
    return out;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

bool operator!=(const SparsePolynomial& a, const SparsePolynomial& b) {
    return !(a == b);
}

SparsePolynomial schubert(const Permutation& w, int n) {
    SparsePolynomial out(n);
    for (const RcGraph& r : enumerate_rcgraphs(w, n)) {
        out.add_term(monomial(r), 1);
    }
    return out;
}

SparsePolynomial schur(const Partition& mu, int n) {
    SparsePolynomial out(n);
    for (const Tableau& y : enumerate_ssyt(mu, n)) {
        out.add_term(y.weight(), 1);
    }
    return out;
}

std::map<Permutation, long long> expand_in_schubert(const SparsePolynomial& p) {
    std::map<Permutation, long long> out;
    SparsePolynomial rem = p;
    const int n = p.n();
    // The lex-max monomial strictly decreases every round, so the loop
    // terminates; the cap only guards against pathological inputs.
    long long guard = 1000000;
    std::vector<int> prev;
    while (!rem.is_zero()) {
        if (guard-- == 0) {
            throw InputError("not a combination of Schubert polynomials");
        }
        const std::vector<int> e = rem.terms().begin()->first;
        const long long c = rem.terms().begin()->second;
        RCG_CHECK(prev.empty() || LexDescend()(prev, e),
                  "greedy elimination must strictly lower the lex-max term");
        prev = e;
        if (c < 0) {
            throw InputError(
                "not a nonnegative combination of Schubert polynomials");
        }
        std::vector<Crossing> left;
        for (int k = 1; k <= n; ++k) {
            for (int t = 0; t < e[k - 1]; ++t) left.push_back({n - t, k});
        }
        const RcGraph r(n, left);
        if (!is_reduced(r) || !is_in_class(r)) {
            throw InputError(
                "not a nonnegative combination of Schubert polynomials");
        }
        const Permutation u = trace(r);
        out[u] += c;
        rem -= schubert(u, n) * SparsePolynomial::constant(n, c);
    }
    return out;
}

}  // namespace rcg
