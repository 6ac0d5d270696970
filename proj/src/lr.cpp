#include "rcg/lr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rcg/error.hpp"
#include "rcg/insertion.hpp"

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

void chains_from(const Permutation& u, int remaining, int d_upper, int n,
                 std::map<Permutation, long long>& out) {
    if (remaining == 0) {
        out[u] += 1;
        return;
    }
    const int slow = u.support_low();
    const int d_low = std::min(slow - 1, 0);
    for (int d = d_low; d <= d_upper; ++d) {
        for (int c = 1; c <= n; ++c) {
            const Permutation u2 = right_transposition(u, c, d);
            if (u2.length() == u.length() + 1) {
                chains_from(u2, remaining - 1, d - 1, n, out);
            }
        }
    }
}

std::string format_exponent(const std::vector<int>& e) {
    std::ostringstream os;
    os << "x^(";
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (t) os << ",";
        os << e[t];
    }
    os << ")";
    return os.str();
}

}  // namespace

LrResult lr_coefficients(const Permutation& w, const Partition& mu, int n,
                         bool run_checks) {
    if (!is_in_class(w)) throw ClassError("permutation is not in class");
    if (mu.rows() > n) throw InputError("partition has more rows than n");
    const std::vector<RcGraph> rs = enumerate_rcgraphs(w, n);
    const std::vector<Tableau> ys = enumerate_ssyt(mu, n);

    LrResult res{w, mu, n, {}, {}, {}};
    for (const RcGraph& r : rs) {
        for (const Tableau& y : ys) {
            res.witnesses[insert_tableau(r, y)].emplace_back(r, y);
        }
    }
    for (auto& [u_graph, pairs] : res.witnesses) {
        std::sort(pairs.begin(), pairs.end());
        const Permutation u = trace(u_graph);
        res.coefficients.emplace(u, static_cast<long long>(pairs.size()));
    }

    if (run_checks) {
        long long weighted = 0;
        for (const auto& [u, c] : res.coefficients) {
            const std::vector<RcGraph> fiber = enumerate_rcgraphs(u, n);
            for (const RcGraph& u_graph : fiber) {
                const auto it = res.witnesses.find(u_graph);
                RCG_CHECK(it != res.witnesses.end() &&
                              static_cast<long long>(it->second.size()) == c,
                          "pair count must not depend on the result graph");
            }
            weighted = checked_add(
                weighted, checked_mul(c, static_cast<long long>(fiber.size())));
        }
        RCG_CHECK(weighted == checked_mul(static_cast<long long>(rs.size()),
                                          static_cast<long long>(ys.size())),
                  "weighted fiber sizes must count all pairs");
        res.checks.u_independence = true;
        res.checks.counting_identity = true;
    }
    return res;
}

std::map<Permutation, long long> pieri_chains(const Permutation& w, int m,
                                              int n) {
    if (m < 0) throw InputError("negative row length");
    if (n < 1) throw InputError("n must be at least 1");
    if (!is_in_class(w)) throw ClassError("permutation is not in class");
    if (!w.is_identity() && w.support_high() > n) {
        throw InputError("permutation moves a number above n");
    }
    std::map<Permutation, long long> out;
    chains_from(w, m, 0, n, out);
    for (const auto& [u, cnt] : out) {
        RCG_CHECK(cnt == 1, "each end permutation must come from one chain");
        RCG_CHECK(is_in_class(u), "chain ends must stay in class");
        RCG_CHECK(u.is_identity() || u.support_high() <= n,
                  "chain ends must stay supported below n");
    }
    return out;
}

JTExpansion jacobi_trudi(const Partition& mu) {
    JTExpansion out;
    const int m = mu.rows();
    if (m == 0) {
        out.plus[{}] += 1;
        return out;
    }
    std::vector<int> sigma(m);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        int inversions = 0;
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                if (sigma[i] > sigma[j]) ++inversions;
            }
        }
        std::vector<int> seq;
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i) {
            const int deg = mu.part(i + 1) - (i + 1) + (sigma[i] + 1);
            if (deg < 0) dead = true;
            if (deg > 0) seq.push_back(deg);
        }
        if (dead) continue;
        std::sort(seq.begin(), seq.end(), std::greater<int>());
        if (inversions % 2 == 0) {
            out.plus[seq] += 1;
        } else {
            out.minus[seq] += 1;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

SparsePolynomial evaluate_jacobi_trudi(const JTExpansion& jt, int n) {
    SparsePolynomial out(n);
    const auto accumulate = [&](const std::map<std::vector<int>, long long>& side,
                                long long sign) {
        for (const auto& [seq, cnt] : side) {
            SparsePolynomial term = SparsePolynomial::constant(n, 1);
            for (int deg : seq) term = term * schur(Partition({deg}), n);
            out += term * SparsePolynomial::constant(n, checked_mul(sign, cnt));
        }
    };
    accumulate(jt.plus, 1);
    accumulate(jt.minus, -1);
    return out;
}

VerifyReport verify_identity(const Permutation& w, const Partition& mu, int n) {
    if (!is_in_class(w)) throw ClassError("permutation is not in class");
    if (mu.rows() > n) throw InputError("partition has more rows than n");

    const SparsePolynomial product = schubert(w, n) * schur(mu, n);
    VerifyReport rep{false, false, false, {}, product, SparsePolynomial(n), ""};

    try {
        rep.coefficients = lr_coefficients(w, mu, n).coefficients;
    } catch (const std::logic_error& ex) {
        rep.first_discrepancy =
            std::string("internal check failed while counting pairs: ") +
            ex.what();
        return rep;
    }

    SparsePolynomial recon(n);
    for (const auto& [u, c] : rep.coefficients) {
        recon += schubert(u, n) * SparsePolynomial::constant(n, c);
    }
    rep.reconstruction = recon;
    rep.polynomial_match = (recon == product);
    if (!rep.polynomial_match) {
        // Walk the union of supports in display order for the first
        // mismatched coefficient.
        SparsePolynomial::TermMap support;
        for (const auto& [e, c] : product.terms()) support.emplace(e, 0);
        for (const auto& [e, c] : recon.terms()) support.emplace(e, 0);
        for (const auto& [e, ignored] : support) {
            const long long lhs = product.coefficient(e);
            const long long rhs = recon.coefficient(e);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "coefficient of " << format_exponent(e) << ": product "
                   << lhs << ", counted sum " << rhs;
                rep.first_discrepancy = os.str();
                break;
            }
        }
    }

    try {
        const std::map<Permutation, long long> expanded =
            expand_in_schubert(product);
        rep.expansion_match = (expanded == rep.coefficients);
        if (!rep.expansion_match && rep.first_discrepancy.empty()) {
            rep.first_discrepancy =
                "basis expansion of the product disagrees with the pair counts";
        }
    } catch (const InputError& ex) {
        rep.expansion_match = false;
        if (rep.first_discrepancy.empty()) {
            rep.first_discrepancy =
                std::string("product failed to expand in the basis: ") +
                ex.what();
        }
    }

    rep.pass = rep.polynomial_match && rep.expansion_match;
    return rep;
}

}  // namespace rcg
