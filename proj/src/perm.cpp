#include "rcg/perm.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "rcg/error.hpp"

namespace rcg {

Permutation::Permutation(int n, int low, std::vector<int> img)
    : n_(n), low_(low), img_(std::move(img))
{
    std::size_t drop = 0;
    while (drop < img_.size() && img_[drop] == low_ + static_cast<int>(drop))
        ++drop;
    if (drop > 0) {
        img_.erase(img_.begin(), img_.begin() + static_cast<std::ptrdiff_t>(drop));
        low_ += static_cast<int>(drop);
    }
    if (img_.empty())
        low_ = n_ + 1;
}

Permutation Permutation::identity(int n)
{
    return Permutation(n, n + 1, {});
}

Permutation Permutation::from_images(int n, int low, const std::map<int, int>& images)
{
    if (images.empty())
        return identity(n);
    if (low > n)
        throw InputError("permutation window is empty but images were given");
    std::vector<int> img(static_cast<std::size_t>(n - low + 1));
    std::set<int> seen;
    for (const auto& [i, v] : images) {
        if (i < low || i > n)
            throw InputError("permutation image key outside window");
        if (v < low || v > n)
            throw InputError("permutation image value outside window");
        if (!seen.insert(v).second)
            throw InputError("permutation images are not injective");
        img[static_cast<std::size_t>(i - low)] = v;
    }
    if (static_cast<int>(images.size()) != n - low + 1)
        throw InputError("permutation images must cover the whole window");
    return Permutation(n, low, std::move(img));
}

int Permutation::operator()(int i) const
{
    if (i < low_ || i > n_)
        return i;
    return img_[static_cast<std::size_t>(i - low_)];
}

int Permutation::support_low() const
{
    return is_identity() ? n_ + 1 : low_;
}

int Permutation::support_high() const
{
    for (int i = static_cast<int>(img_.size()) - 1; i >= 0; --i)
        if (img_[static_cast<std::size_t>(i)] != low_ + i)
            return low_ + i;
    return n_;  // identity: empty range convention (support_low > support_high)
}

int Permutation::length() const
{
    int inv = 0;
    const int m = static_cast<int>(img_.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (img_[static_cast<std::size_t>(a)] > img_[static_cast<std::size_t>(b)])
                ++inv;
    return inv;
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(img_.size());
    for (std::size_t t = 0; t < img_.size(); ++t)
        inv[static_cast<std::size_t>(img_[t] - low_)] = low_ + static_cast<int>(t);
    return Permutation(n_, low_, std::move(inv));
}

namespace {

// Canonical view for comparisons: support trimmed at both ends.
struct Key {
    int lo;
    int hi;
    const Permutation* w;
};

Key key_of(const Permutation& w)
{
    if (w.is_identity())
        return {std::numeric_limits<int>::max(), std::numeric_limits<int>::min(), &w};
    int lo = w.support_low();
    int hi = lo;
    for (int i = lo; i <= w.n(); ++i)
        if (w(i) != i)
            hi = i;
    return {lo, hi, &w};
}

}  // namespace

bool Permutation::operator==(const Permutation& o) const
{
    Key a = key_of(*this), b = key_of(o);
    if (a.lo != b.lo || a.hi != b.hi)
        return false;
    for (int i = a.lo; i <= a.hi; ++i)
        if ((*this)(i) != o(i))
            return false;
    return true;
}

bool Permutation::operator<(const Permutation& o) const
{
    Key a = key_of(*this), b = key_of(o);
    if (a.lo != b.lo)
        return a.lo < b.lo;
    if (a.hi != b.hi)
        return a.hi < b.hi;
    for (int i = a.lo; i <= a.hi; ++i)
        if ((*this)(i) != o(i))
            return (*this)(i) < o(i);
    return false;
}

Permutation operator*(const Permutation& u, const Permutation& v)
{
    const int n = std::max(u.n_, v.n_);
    const int low = std::min(u.is_identity() ? n + 1 : u.low_,
                             v.is_identity() ? n + 1 : v.low_);
    if (low > n)
        return Permutation::identity(n);
    std::vector<int> img(static_cast<std::size_t>(n - low + 1));
    for (int i = low; i <= n; ++i)
        img[static_cast<std::size_t>(i - low)] = u(v(i));
    return Permutation(n, low, std::move(img));
}

Permutation simple_transposition(int j, int n)
{
    if (j > n - 1)
        throw InputError("simple transposition index must be <= n-1");
    std::vector<int> img(static_cast<std::size_t>(n - j + 1));
    for (int i = j; i <= n; ++i)
        img[static_cast<std::size_t>(i - j)] = i;
    img[0] = j + 1;
    img[1] = j;
    return Permutation(n, j, std::move(img));
}

Permutation right_transposition(const Permutation& w, int c, int d)
{
    if (c == d)
        throw InputError("transposition positions must differ");
    if (c > w.n() || d > w.n())
        throw InputError("transposition position above the window top");
    const int n = w.n_;
    const int low = std::min({w.is_identity() ? n + 1 : w.low_, c, d});
    std::vector<int> img(static_cast<std::size_t>(n - low + 1));
    for (int i = low; i <= n; ++i)
        img[static_cast<std::size_t>(i - low)] = w(i);
    std::swap(img[static_cast<std::size_t>(c - low)], img[static_cast<std::size_t>(d - low)]);
    return Permutation(n, low, std::move(img));
}

bool is_in_class(const Permutation& w)
{
    if (w.is_identity())
        return true;
    const int lo = w.support_low();
    for (int i = std::min(0, w.n()); i >= lo; --i)
        if (w(i) <= w(i - 1))
            return false;
    return true;
}

Permutation w_of_partition(const Partition& mu, int n)
{
    if (mu.rows() > n)
        throw InputError("partition has more parts than n");
    Permutation acc = Permutation::identity(n);
    // Row k of the dominant diagram contributes the ascending run
    // s_{k-mu_k} ... s_{k-1}; rows are taken top (k = n) to bottom.
    for (int k = n; k >= 1; --k) {
        const int mk = mu.part(k);
        for (int j = k - mk; j <= k - 1; ++j)
            acc = acc * simple_transposition(j, n);
    }
    return acc;
}

}  // namespace rcg
