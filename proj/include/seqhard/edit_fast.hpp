#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "seqhard/measures.hpp"
#include "seqhard/sequence.hpp"

namespace seqhard {

// Positive integer costs affinely equivalent to a rational scheme:
// for every traversal of strings of lengths n >= m,
//   integer-cost = D * original-cost + 2*M*m + M*(n-m).
struct IntegerCostScheme {
    long long del_x, del_y, match, subst;
    long long D;  // common denominator of the source scheme
    long long M;  // shift added once per deletion, twice per match/subst

    Rational to_original(long long value, long long n, long long m) const {
        return Rational(value - 2 * M * m - M * (n - m), D);
    }
};

namespace detail {
inline long long ceil_div_ll(long long a, long long b) {
    assert(b > 0);
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}
} // namespace detail

// Clears denominators with D = lcm, then adds the smallest shift M that makes
// every cost >= 1 (M once per deletion, twice per match/subst keeps the
// traversal-cost identity affine).
inline IntegerCostScheme to_positive_integer_costs(const CostScheme& c) {
    ScaledCosts sc = ScaledCosts::from(c);
    long long M = std::max<long long>(
        {0, 1 - sc.del_x, 1 - sc.del_y,
         detail::ceil_div_ll(1 - sc.match, 2),
         detail::ceil_div_ll(1 - sc.subst, 2)});
    return {sc.del_x + M, sc.del_y + M, sc.match + 2 * M, sc.subst + 2 * M,
            sc.scale, M};
}

// Successor queries over a fixed string x (1-indexed):
//   next_eq(i, s) = min{i' > i : x[i'] = s},   next_ne(i, s) = min{i' > i : x[i'] != s},
// both kInf when no such position exists. Equal-successor answers come either
// from dense per-symbol arrays or from versioned path-copied snapshots (one
// tree version per prefix index); unequal-successor queries are O(1) either
// way since next_ne(i, s) = i+1 whenever s != x[i+1].
class NextStructure {
public:
    static constexpr long long kInf = INT64_MAX / 2;
    enum class Mode { Auto, Dense, Versioned };

    explicit NextStructure(const Seq& x, Mode mode = Mode::Auto) : x_(x) {
        n_ = static_cast<long long>(x.size());
        dict_ = x;
        std::sort(dict_.begin(), dict_.end());
        dict_.erase(std::unique(dict_.begin(), dict_.end()), dict_.end());
        sigma_ = static_cast<long long>(dict_.size());
        dense_ = (mode == Mode::Dense) ||
                 (mode == Mode::Auto && sigma_ <= 64);
        build_ne();
        if (dense_) build_dense(); else build_versioned();
    }

    long long n() const { return n_; }
    long long alphabet_size() const { return sigma_; }
    bool is_dense() const { return dense_; }

    long long next_eq(long long i, long long symbol) const {
        if (i >= kInf || i >= n_) return kInf;
        long long id = symbol_id(symbol);
        if (id < 0) return kInf;
        if (dense_) return eq_[static_cast<size_t>(id)][static_cast<size_t>(i)];
        return query_tree(roots_[static_cast<size_t>(i)], 0, sigma_ - 1, id);
    }

    long long next_ne(long long i, long long symbol) const {
        if (i >= kInf || i >= n_) return kInf;
        if (x_[static_cast<size_t>(i)] != symbol) return i + 1;  // x[i+1], 1-indexed
        return ne_skip_[static_cast<size_t>(i)];
    }

private:
    long long symbol_id(long long symbol) const {
        auto it = std::lower_bound(dict_.begin(), dict_.end(), symbol);
        if (it == dict_.end() || *it != symbol) return -1;
        return it - dict_.begin();
    }

    // ne_skip_[i] = min{i' > i : x[i'] != x[i+1]} (positions 1-indexed).
    void build_ne() {
        ne_skip_.assign(static_cast<size_t>(std::max<long long>(n_, 1)), kInf);
        for (long long i = n_ - 2; i >= 0; --i) {
            size_t si = static_cast<size_t>(i);
            ne_skip_[si] = (x_[si + 1] != x_[si]) ? i + 2 : ne_skip_[si + 1];
        }
    }

    void build_dense() {
        eq_.assign(static_cast<size_t>(sigma_),
                   std::vector<long long>(static_cast<size_t>(n_) + 1, kInf));
        for (long long i = n_ - 1; i >= 0; --i) {
            for (long long s = 0; s < sigma_; ++s)
                eq_[static_cast<size_t>(s)][static_cast<size_t>(i)] =
                    eq_[static_cast<size_t>(s)][static_cast<size_t>(i) + 1];
            long long id = symbol_id(x_[static_cast<size_t>(i)]);
            eq_[static_cast<size_t>(id)][static_cast<size_t>(i)] = i + 1;
        }
    }

    struct Node { int left = -1, right = -1; long long val = kInf; };

    int update_tree(int node, long long lo, long long hi, long long id, long long val) {
        Node fresh = (node >= 0) ? pool_[static_cast<size_t>(node)] : Node{};
        if (lo == hi) {
            fresh.val = val;
        } else {
            long long mid = lo + (hi - lo) / 2;
            if (id <= mid)
                fresh.left = update_tree(fresh.left, lo, mid, id, val);
            else
                fresh.right = update_tree(fresh.right, mid + 1, hi, id, val);
        }
        pool_.push_back(fresh);
        return static_cast<int>(pool_.size()) - 1;
    }

    long long query_tree(int node, long long lo, long long hi, long long id) const {
        while (node >= 0 && lo != hi) {
            long long mid = lo + (hi - lo) / 2;
            const Node& nd = pool_[static_cast<size_t>(node)];
            if (id <= mid) { node = nd.left; hi = mid; }
            else { node = nd.right; lo = mid + 1; }
        }
        return node < 0 ? kInf : pool_[static_cast<size_t>(node)].val;
    }

    void build_versioned() {
        roots_.assign(static_cast<size_t>(n_) + 1, -1);
        // Version i answers queries with prefix index i; built right to left.
        for (long long i = n_ - 1; i >= 0; --i) {
            long long id = symbol_id(x_[static_cast<size_t>(i)]);
            roots_[static_cast<size_t>(i)] =
                update_tree(roots_[static_cast<size_t>(i) + 1], 0, sigma_ - 1,
                            id, i + 1);
        }
    }

    Seq x_;
    long long n_ = 0;
    long long sigma_ = 0;
    bool dense_ = true;
    Seq dict_;
    std::vector<long long> ne_skip_;
    std::vector<std::vector<long long>> eq_;  // dense mode
    std::vector<Node> pool_;                  // versioned mode
    std::vector<int> roots_;
};

// I[j][k] = min{0 <= i <= n : edit(x[1..i], y[1..j]) - del_x*(i-j) = k},
// kept around so tests can compare every cell against its definition.
struct EditFastResult {
    long long value = 0;
    long long m_bound = 0;
    std::vector<std::vector<long long>> table;
    static constexpr long long kInf = NextStructure::kInf;
};

// Normalized-table edit distance; requires |x| >= |y| and positive integer
// costs. O((n + m^2) log|Sigma|) with the versioned Next structure.
inline EditFastResult edit_fast_full(const Seq& x, const Seq& y,
                                     const IntegerCostScheme& c,
                                     NextStructure::Mode mode = NextStructure::Mode::Auto) {
    if (x.size() < y.size())
        throw std::invalid_argument("edit_fast needs |x| >= |y|");
    assert(c.del_x >= 1 && c.del_y >= 1 && c.match >= 1 && c.subst >= 1);
    const long long n = static_cast<long long>(x.size());
    const long long m = static_cast<long long>(y.size());
    constexpr long long inf = EditFastResult::kInf;

    NextStructure next(x, mode);
    EditFastResult r;
    r.m_bound = (c.del_x + c.del_y) * m;
    r.table.assign(static_cast<size_t>(m) + 1,
                   std::vector<long long>(static_cast<size_t>(r.m_bound) + 1, inf));
    r.table[0][0] = 0;

    auto cell = [&](long long j, long long k) {
        return (k < 0 || k > r.m_bound) ? inf
               : r.table[static_cast<size_t>(j)][static_cast<size_t>(k)];
    };
    for (long long j = 1; j <= m; ++j) {
        const long long yj = y[static_cast<size_t>(j) - 1];
        for (long long k = 0; k <= r.m_bound; ++k) {
            long long best = cell(j - 1, k - c.del_x - c.del_y);
            best = std::min(best, next.next_eq(cell(j - 1, k - c.match), yj));
            best = std::min(best, next.next_ne(cell(j - 1, k - c.subst), yj));
            r.table[static_cast<size_t>(j)][static_cast<size_t>(k)] = best;
        }
    }
    long long k = 0;
    while (k < r.m_bound &&
           r.table[static_cast<size_t>(m)][static_cast<size_t>(k)] >= inf) ++k;
    assert(r.table[static_cast<size_t>(m)][static_cast<size_t>(k)] < inf);
    r.value = c.del_x * (n - m) + k;
    return r;
}

// Order-insensitive wrapper: swaps the strings (and deletion costs) so the
// first one is the longer.
inline long long edit_fast(const Seq& x, const Seq& y, const IntegerCostScheme& c,
                           NextStructure::Mode mode = NextStructure::Mode::Auto) {
    if (x.size() >= y.size()) return edit_fast_full(x, y, c, mode).value;
    IntegerCostScheme swapped = c;
    std::swap(swapped.del_x, swapped.del_y);
    return edit_fast_full(y, x, swapped, mode).value;
}

// Full pipeline on a rational scheme: transform to positive integers, run the
// fast algorithm, invert the affine witness.
inline Rational edit_fast_rational(const Seq& x, const Seq& y, const CostScheme& costs,
                                   NextStructure::Mode mode = NextStructure::Mode::Auto) {
    IntegerCostScheme ic = to_positive_integer_costs(costs);
    long long v = edit_fast(x, y, ic, mode);
    long long n = std::max(x.size(), y.size());
    long long m = std::min(x.size(), y.size());
    return ic.to_original(v, n, m);
}

} // namespace seqhard
