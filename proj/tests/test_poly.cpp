#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <climits>
#include <map>
#include <vector>

#include "rcg/error.hpp"
#include "rcg/perm.hpp"
#include "rcg/poly.hpp"
#include "rcg/rcgraph.hpp"
#include "rcg/tableau.hpp"

using namespace rcg;

namespace {

Permutation perm(int n, int low, const std::vector<int>& images) {
    std::map<int, int> m;
    for (std::size_t t = 0; t < images.size(); ++t) {
        m[low + static_cast<int>(t)] = images[t];
    }
    return Permutation::from_images(n, low, m);
}

std::vector<Permutation> class_perms(int low, int n) {
    std::vector<int> images;
    for (int v = low; v <= n; ++v) images.push_back(v);
    std::vector<Permutation> out;
    std::sort(images.begin(), images.end());
    do {
        Permutation w = perm(n, low, images);
        if (is_in_class(w)) out.push_back(w);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

// All partitions with at most max_parts parts and total size <= total,
// including the empty partition.
std::vector<Partition> partitions_up_to(int total, int max_parts) {
    std::vector<Partition> out{Partition()};
    std::vector<int> parts;
    const auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (!parts.empty()) out.push_back(Partition(parts));
        if (remaining == 0 || static_cast<int>(parts.size()) == max_parts) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

}  // namespace

TEST_CASE("term bookkeeping drops cancelled and zero terms") {
    SparsePolynomial p(2);
    CHECK(p.is_zero());
    p.add_term({1, 0}, 0);
    CHECK(p.is_zero());
    p.add_term({1, 0}, 3);
    CHECK(p.coefficient({1, 0}) == 3);
    p.add_term({1, 0}, -3);
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.add_term({1}, 1), InputError);
    CHECK_THROWS_AS(p.add_term({-1, 0}, 1), InputError);
}

TEST_CASE("terms iterate in descending lex order") {
    const SparsePolynomial x1 = SparsePolynomial::single(2, {1, 0}, 1);
    const SparsePolynomial x2 = SparsePolynomial::single(2, {0, 1}, 1);
    const SparsePolynomial sq = (x1 + x2) * (x1 + x2);
    std::vector<std::vector<int>> order;
    std::vector<long long> coeffs;
    for (const auto& [e, c] : sq.terms()) {
        order.push_back(e);
        coeffs.push_back(c);
    }
    CHECK(order == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(coeffs == std::vector<long long>{1, 2, 1});
}

TEST_CASE("arithmetic rejects mixed variable counts") {
    CHECK_THROWS_AS(SparsePolynomial::constant(2, 1) +
                        SparsePolynomial::constant(3, 1),
                    InputError);
    CHECK_THROWS_AS(SparsePolynomial::constant(2, 1) *
                        SparsePolynomial::constant(3, 1),
                    InputError);
}

TEST_CASE("coefficient overflow is detected, not wrapped") {
    const SparsePolynomial big = SparsePolynomial::constant(1, LLONG_MAX);
    CHECK_THROWS_AS(big + SparsePolynomial::constant(1, 1), InputError);
    CHECK_THROWS_AS(big * SparsePolynomial::constant(1, 2), InputError);
    CHECK_NOTHROW(big + SparsePolynomial::constant(1, -1));
}

TEST_CASE("multiplication distributes over hand-checked products") {
    const SparsePolynomial p = SparsePolynomial::constant(2, 1);
    const SparsePolynomial x1 = SparsePolynomial::single(2, {1, 0}, 1);
    CHECK(x1 * p == x1);
    SparsePolynomial expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({1, 1}, 2);
    expect.add_term({0, 2}, 1);
    CHECK((x1 + SparsePolynomial::single(2, {0, 1}, 1)) *
              (x1 + SparsePolynomial::single(2, {0, 1}, 1)) ==
          expect);
}

TEST_CASE("basis polynomial anchors") {
    CHECK(schubert(Permutation::identity(3), 3) ==
          SparsePolynomial::constant(3, 1));

    SparsePolynomial linear(3);
    linear.add_term({1, 0, 0}, 1);
    linear.add_term({0, 1, 0}, 1);
    linear.add_term({0, 0, 1}, 1);
    CHECK(schubert(simple_transposition(0, 3), 3) == linear);

    SparsePolynomial sym21(2);
    sym21.add_term({2, 1}, 1);
    sym21.add_term({1, 2}, 1);
    CHECK(schubert(w_of_partition(Partition({2, 1}), 2), 2) == sym21);
    CHECK(schur(Partition({2, 1}), 2) == sym21);

    SparsePolynomial lin2(2);
    lin2.add_term({1, 0}, 1);
    lin2.add_term({0, 1}, 1);
    CHECK(schur(Partition({1}), 2) == lin2);
    CHECK(schur(Partition({1, 1, 1}), 2) == SparsePolynomial(2));
}

TEST_CASE("schubert rejects traces outside the class") {
    CHECK_THROWS_AS(schubert(perm(2, -1, {0, 1, -1, 2}).inverse(), 2),
                    ClassError);
}

TEST_CASE("Schur equals the Schubert polynomial of the partition trace") {
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& mu : partitions_up_to(5, n)) {
            CHECK(schur(mu, n) == schubert(w_of_partition(mu, n), n));
        }
    }
}

TEST_CASE("Schur polynomials are symmetric in the variables") {
    std::vector<int> idx{0, 1, 2};
    const std::vector<Partition> shapes = partitions_up_to(4, 3);
    do {
        for (const Partition& mu : shapes) {
            const SparsePolynomial s = schur(mu, 3);
            SparsePolynomial permuted(3);
            for (const auto& [e, c] : s.terms()) {
                permuted.add_term({e[idx[0]], e[idx[1]], e[idx[2]]}, c);
            }
            CHECK(permuted == s);
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("the lex-max term of a Schubert polynomial is the top monomial") {
    for (const Permutation& w : class_perms(-1, 2)) {
        const SparsePolynomial s = schubert(w, 2);
        REQUIRE(!s.is_zero());
        CHECK(s.terms().begin()->first == monomial(top_rcgraph(w, 2)));
        CHECK(s.terms().begin()->second == 1);
    }
    for (const Permutation& w : class_perms(0, 3)) {
        const SparsePolynomial s = schubert(w, 3);
        REQUIRE(!s.is_zero());
        CHECK(s.terms().begin()->first == monomial(top_rcgraph(w, 3)));
        CHECK(s.terms().begin()->second == 1);
    }
}

TEST_CASE("expansion recovers basis elements and the zero polynomial") {
    CHECK(expand_in_schubert(SparsePolynomial(2)).empty());
    for (const Permutation& w : class_perms(-1, 2)) {
        const std::map<Permutation, long long> got =
            expand_in_schubert(schubert(w, 2));
        REQUIRE(got.size() == 1);
        CHECK(got.begin()->first == w);
        CHECK(got.begin()->second == 1);
    }
}

TEST_CASE("expansion matches the classical Pieri square") {
    const SparsePolynomial s1 = schur(Partition({1}), 2);
    const std::map<Permutation, long long> got = expand_in_schubert(s1 * s1);
    std::map<Permutation, long long> expect;
    expect[w_of_partition(Partition({2}), 2)] = 1;
    expect[w_of_partition(Partition({1, 1}), 2)] = 1;
    CHECK(got == expect);
}

TEST_CASE("expansion round-trips weighted combinations") {
    const std::vector<Permutation> ws = class_perms(0, 3);
    REQUIRE(ws.size() >= 4);
    std::map<Permutation, long long> combo;
    combo[ws[0]] = 2;
    combo[ws[1]] = 7;
    combo[ws[3]] = 1;
    SparsePolynomial p(3);
    for (const auto& [w, c] : combo) {
        p += schubert(w, 3) * SparsePolynomial::constant(3, c);
    }
    CHECK(expand_in_schubert(p) == combo);
}

TEST_CASE("expansion rejects polynomials outside the nonnegative span") {
    CHECK_THROWS_AS(expand_in_schubert(SparsePolynomial::single(1, {1}, -1)),
                    InputError);
    // x1^2 + x2^2 forces a negative remainder on x1*x2.
    SparsePolynomial p(2);
    p.add_term({2, 0}, 1);
    p.add_term({0, 2}, 1);
    CHECK_THROWS_AS(expand_in_schubert(p), InputError);
}
