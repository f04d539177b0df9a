#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <vector>

#include "seqhard/sequence.hpp"

namespace seqhard {

// Integer-scaled view of a CostScheme: every cost multiplied by the lcm of
// the four denominators. All DP hot loops run on these.
struct ScaledCosts {
    long long del_x, del_y, match, subst;
    long long scale; // original cost = scaled / scale

    static ScaledCosts from(const CostScheme& c) {
        long long d = lcm_ll(lcm_ll(c.del_x.den(), c.del_y.den()),
                             lcm_ll(c.match.den(), c.subst.den()));
        auto s = [d](const Rational& r) { return r.num() * (d / r.den()); };
        return {s(c.del_x), s(c.del_y), s(c.match), s(c.subst), d};
    }
};

// Quadratic edit-distance DP over integer costs, two rows.
inline long long edit_dp_scaled(const Seq& x, const Seq& y, const ScaledCosts& c) {
    const size_t n = x.size(), m = y.size();
    std::vector<long long> prev(m + 1), cur(m + 1);
    for (size_t j = 1; j <= m; ++j) prev[j] = prev[j - 1] + c.del_y;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = prev[0] + c.del_x;
        const long long xi = x[i - 1];
        for (size_t j = 1; j <= m; ++j) {
            long long diag = prev[j - 1] + (xi == y[j - 1] ? c.match : c.subst);
            cur[j] = std::min({diag, prev[j] + c.del_x, cur[j - 1] + c.del_y});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// Minimum traversal cost of the four edit operations, exact rational.
inline Rational edit_dp(const Seq& x, const Seq& y, const CostScheme& costs) {
    ScaledCosts sc = ScaledCosts::from(costs);
    return Rational(edit_dp_scaled(x, y, sc), sc.scale);
}

inline long long lcs_length(const Seq& x, const Seq& y) {
    const size_t n = x.size(), m = y.size();
    std::vector<long long> prev(m + 1), cur(m + 1);
    for (size_t i = 1; i <= n; ++i) {
        const long long xi = x[i - 1];
        for (size_t j = 1; j <= m; ++j) {
            cur[j] = (xi == y[j - 1]) ? prev[j - 1] + 1
                                      : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
        std::fill(cur.begin(), cur.end(), 0);
    }
    return prev[m];
}

// Number of unmatched symbols: |x| + |y| - 2|LCS(x,y)|.
inline long long delta_lcs(const Seq& x, const Seq& y) {
    return static_cast<long long>(x.size()) + static_cast<long long>(y.size())
         - 2 * lcs_length(x, y);
}

// DTW on 1-D curves with distance |a-b|.
inline long long dtw_dp(const Seq& x, const Seq& y) {
    if (x.empty() || y.empty())
        throw EmptyCurve("dtw is undefined for empty curves");
    const size_t n = x.size(), m = y.size();
    constexpr long long inf = INT64_MAX / 4;
    std::vector<long long> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        const long long xi = x[i - 1];
        for (size_t j = 1; j <= m; ++j) {
            long long best = std::min({prev[j - 1], prev[j], cur[j - 1]});
            cur[j] = best + std::llabs(xi - y[j - 1]);
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// Longest palindromic subsequence, interval DP.
inline long long lps_length(const Seq& x) {
    const size_t n = x.size();
    if (n == 0) return 0;
    // dp[i][j] over intervals [i, j], rolled by interval length.
    std::vector<std::vector<long long>> dp(n, std::vector<long long>(n, 0));
    for (size_t i = 0; i < n; ++i) dp[i][i] = 1;
    for (size_t len = 2; len <= n; ++len) {
        for (size_t i = 0; i + len <= n; ++i) {
            size_t j = i + len - 1;
            if (x[i] == x[j])
                dp[i][j] = (len == 2 ? 2 : dp[i + 1][j - 1] + 2);
            else
                dp[i][j] = std::max(dp[i + 1][j], dp[i][j - 1]);
        }
    }
    return dp[0][n - 1];
}

// Longest tandem subsequence by splitting at every position and taking
// twice the LCS of the halves; O(n^3).
inline long long lts_length(const Seq& x) {
    const size_t n = x.size();
    long long best = 0;
    for (size_t i = 1; i < n; ++i) {
        Seq left(x.begin(), x.begin() + i);
        Seq right(x.begin() + i, x.end());
        best = std::max(best, 2 * lcs_length(left, right));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Full-table variants with path recovery, used by the witness builders.

enum class EditOp : uint8_t { Diag, DelX, DelY };

// Optimal edit script as a step sequence; byte-sized backpointers keep the
// memory at n*m bytes.
inline std::vector<EditOp> edit_dp_path(const Seq& x, const Seq& y,
                                        const ScaledCosts& c) {
    const size_t n = x.size(), m = y.size();
    std::vector<std::vector<uint8_t>> choice(n + 1, std::vector<uint8_t>(m + 1));
    std::vector<long long> prev(m + 1), cur(m + 1);
    for (size_t j = 1; j <= m; ++j) {
        prev[j] = prev[j - 1] + c.del_y;
        choice[0][j] = static_cast<uint8_t>(EditOp::DelY);
    }
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = prev[0] + c.del_x;
        choice[i][0] = static_cast<uint8_t>(EditOp::DelX);
        for (size_t j = 1; j <= m; ++j) {
            long long diag = prev[j - 1]
                           + (x[i - 1] == y[j - 1] ? c.match : c.subst);
            cur[j] = diag;
            choice[i][j] = static_cast<uint8_t>(EditOp::Diag);
            if (prev[j] + c.del_x < cur[j]) {
                cur[j] = prev[j] + c.del_x;
                choice[i][j] = static_cast<uint8_t>(EditOp::DelX);
            }
            if (cur[j - 1] + c.del_y < cur[j]) {
                cur[j] = cur[j - 1] + c.del_y;
                choice[i][j] = static_cast<uint8_t>(EditOp::DelY);
            }
        }
        std::swap(prev, cur);
    }
    std::vector<EditOp> ops;
    size_t i = n, j = m;
    while (i > 0 || j > 0) {
        EditOp op = static_cast<EditOp>(choice[i][j]);
        ops.push_back(op);
        if (op != EditOp::DelY) --i;
        if (op != EditOp::DelX) --j;
    }
    std::reverse(ops.begin(), ops.end());
    return ops;
}

// Optimal DTW warping path as 1-based index pairs from (1,1) to (n,m).
inline std::vector<std::pair<long long, long long>> dtw_dp_path(const Seq& x,
                                                                const Seq& y) {
    if (x.empty() || y.empty())
        throw EmptyCurve("dtw is undefined for empty curves");
    const size_t n = x.size(), m = y.size();
    constexpr long long inf = INT64_MAX / 4;
    // 0: from (i-1,j-1), 1: from (i-1,j), 2: from (i,j-1)
    std::vector<std::vector<uint8_t>> choice(n + 1, std::vector<uint8_t>(m + 1));
    std::vector<long long> prev(m + 1, inf), cur(m + 1, inf);
    prev[0] = 0;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = inf;
        for (size_t j = 1; j <= m; ++j) {
            long long best = prev[j - 1];
            uint8_t from = 0;
            if (prev[j] < best) { best = prev[j]; from = 1; }
            if (cur[j - 1] < best) { best = cur[j - 1]; from = 2; }
            cur[j] = (best >= inf) ? inf
                     : best + std::llabs(x[i - 1] - y[j - 1]);
            choice[i][j] = from;
        }
        std::swap(prev, cur);
        std::fill(cur.begin(), cur.end(), inf);
    }
    std::vector<std::pair<long long, long long>> path;
    size_t i = n, j = m;
    while (true) {
        path.emplace_back(i, j);
        if (i == 1 && j == 1) break;
        uint8_t from = choice[i][j];
        if (from != 2) --i;
        if (from != 1) --j;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace seqhard
