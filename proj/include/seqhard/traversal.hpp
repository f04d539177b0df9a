#pragma once

#include <cstdlib>
#include <utility>
#include <vector>

#include "seqhard/measures.hpp"
#include "seqhard/sequence.hpp"

namespace seqhard {

// A traversal is a monotone pair sequence: it starts at (1,1), ends at a
// prescribed endpoint, and each step increments one or both coordinates.
using Traversal = std::vector<std::pair<long long, long long>>;

inline bool validate_traversal(const Traversal& t, long long end_a, long long end_b) {
    if (t.empty()) return false;
    if (t.front() != std::pair<long long, long long>{1, 1}) return false;
    if (t.back() != std::pair<long long, long long>{end_a, end_b}) return false;
    for (size_t k = 1; k < t.size(); ++k) {
        long long da = t[k].first - t[k - 1].first;
        long long db = t[k].second - t[k - 1].second;
        if (da < 0 || db < 0 || da > 1 || db > 1 || (da == 0 && db == 0))
            return false;
    }
    return true;
}

// DTW cost of a warping path: entries index into x and y (1-based) and every
// visited pair contributes |x[a]-y[b]|. Endpoint is (|x|, |y|).
inline Rational traversal_cost_dtw(const Traversal& t, const Seq& x, const Seq& y) {
    if (x.empty() || y.empty())
        throw EmptyCurve("dtw is undefined for empty curves");
    const long long n = static_cast<long long>(x.size());
    const long long m = static_cast<long long>(y.size());
    if (!validate_traversal(t, n, m))
        throw InvalidTraversal("not a valid warping path of the two curves");
    long long cost = 0;
    for (auto [a, b] : t) cost += std::llabs(x[a - 1] - y[b - 1]);
    return Rational(cost);
}

// Edit cost of a traversal through the (|x|+1) x (|y|+1) grid: pairs run from
// (1,1) to (|x|+1, |y|+1); a step pays for the symbols it consumes at its
// source — del_x / del_y for a horizontal / vertical step, match or subst for
// a diagonal one.
inline Rational traversal_cost_edit(const Traversal& t, const Seq& x, const Seq& y,
                                    const CostScheme& costs) {
    const long long n = static_cast<long long>(x.size());
    const long long m = static_cast<long long>(y.size());
    if (!validate_traversal(t, n + 1, m + 1))
        throw InvalidTraversal("not a valid edit traversal of the two strings");
    Rational cost = 0;
    for (size_t k = 1; k < t.size(); ++k) {
        long long a = t[k - 1].first, b = t[k - 1].second;
        long long da = t[k].first - a, db = t[k].second - b;
        if (da == 1 && db == 1)
            cost += (x[a - 1] == y[b - 1]) ? costs.match : costs.subst;
        else if (da == 1)
            cost += costs.del_x;
        else
            cost += costs.del_y;
    }
    return cost;
}

namespace detail {

inline void brute_edit_rec(const Seq& x, const Seq& y, size_t a, size_t b,
                           long long acc, const ScaledCosts& c, long long& best) {
    if (a == x.size() && b == y.size()) {
        best = std::min(best, acc);
        return;
    }
    if (a < x.size())
        brute_edit_rec(x, y, a + 1, b, acc + c.del_x, c, best);
    if (b < y.size())
        brute_edit_rec(x, y, a, b + 1, acc + c.del_y, c, best);
    if (a < x.size() && b < y.size())
        brute_edit_rec(x, y, a + 1, b + 1,
                       acc + (x[a] == y[b] ? c.match : c.subst), c, best);
}

inline void brute_dtw_rec(const Seq& x, const Seq& y, size_t a, size_t b,
                          long long acc, long long& best) {
    acc += std::llabs(x[a - 1] - y[b - 1]);
    if (a == x.size() && b == y.size()) {
        best = std::min(best, acc);
        return;
    }
    if (a < x.size())
        brute_dtw_rec(x, y, a + 1, b, acc, best);
    if (b < y.size())
        brute_dtw_rec(x, y, a, b + 1, acc, best);
    if (a < x.size() && b < y.size())
        brute_dtw_rec(x, y, a + 1, b + 1, acc, best);
}

inline void check_brute_budget(const Seq& x, const Seq& y, size_t bound) {
    if (x.size() + y.size() > bound)
        throw BudgetExceeded("traversal enumeration limited to |x|+|y| <= "
                             + std::to_string(bound));
}

} // namespace detail

// Exact minimum over all edit traversals, by explicit enumeration.
inline Rational brute_force_min_edit(const Seq& x, const Seq& y,
                                     const CostScheme& costs, size_t bound = 14) {
    detail::check_brute_budget(x, y, bound);
    ScaledCosts sc = ScaledCosts::from(costs);
    long long best = INT64_MAX;
    detail::brute_edit_rec(x, y, 0, 0, 0, sc, best);
    return Rational(best, sc.scale);
}

// Exact minimum over all warping paths, by explicit enumeration.
inline Rational brute_force_min_dtw(const Seq& x, const Seq& y, size_t bound = 14) {
    if (x.empty() || y.empty())
        throw EmptyCurve("dtw is undefined for empty curves");
    detail::check_brute_budget(x, y, bound);
    long long best = INT64_MAX;
    detail::brute_dtw_rec(x, y, 1, 1, 0, best);
    return Rational(best);
}

} // namespace seqhard
