#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "seqhard/measures.hpp"
#include "seqhard/sequence.hpp"
#include "seqhard/traversal.hpp"

namespace seqhard {

struct InvalidAlignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidShift : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A partial alignment: index pairs (1-based) with strictly increasing
// components, at most one pair per y-index.
using PartialAlignment = std::vector<std::pair<long long, long long>>;

// Pairwise distances dist(x_i, y_j), indexed [i-1][j-1].
using DistMatrix = std::vector<std::vector<Rational>>;

inline void check_alignment(const PartialAlignment& a, long long n, long long m) {
    long long pi = 0, pj = 0;
    for (auto [i, j] : a) {
        if (i <= pi || j <= pj || i > n || j > m)
            throw InvalidAlignment("alignment pairs must be strictly increasing and in range");
        pi = i; pj = j;
    }
}

inline Rational max_dist(const DistMatrix& d) {
    Rational mx = d[0][0];
    for (const auto& row : d)
        for (const auto& v : row)
            if (v > mx) mx = v;
    return mx;
}

// Aligned pairs pay their distance; each of the (m - |A|) unaligned y-indices
// pays the maximum pairwise distance as punishment.
inline Rational alignment_cost(const PartialAlignment& a, const DistMatrix& d) {
    const long long n = static_cast<long long>(d.size());
    const long long m = static_cast<long long>(d[0].size());
    check_alignment(a, n, m);
    Rational cost = Rational(m - static_cast<long long>(a.size())) * max_dist(d);
    for (auto [i, j] : a)
        cost += d[static_cast<size_t>(i) - 1][static_cast<size_t>(j) - 1];
    return cost;
}

// Minimum of alignment_cost over all partial alignments, O(n*m) DP: aligning
// (i,j) changes the cost by dist(i,j) - maxd relative to leaving j unaligned.
inline Rational min_over_partial(const DistMatrix& d) {
    const size_t n = d.size(), m = d[0].size();
    Rational maxd = max_dist(d);
    std::vector<std::vector<Rational>> f(n + 1, std::vector<Rational>(m + 1, 0));
    for (size_t i = 1; i <= n; ++i) {
        for (size_t j = 1; j <= m; ++j) {
            Rational best = f[i - 1][j];
            if (f[i][j - 1] < best) best = f[i][j - 1];
            Rational take = f[i - 1][j - 1] + d[i - 1][j - 1] - maxd;
            if (take < best) best = take;
            f[i][j] = best;
        }
    }
    return f[n][m] + Rational(static_cast<long long>(m)) * maxd;
}

namespace detail {
inline void enum_alignments(const DistMatrix& d, size_t i, size_t j,
                            PartialAlignment& acc, Rational& best) {
    Rational cost = alignment_cost(acc, d);
    if (cost < best) best = cost;
    if (i > d.size() || j > d[0].size()) return;
    for (size_t ii = i; ii <= d.size(); ++ii) {
        for (size_t jj = j; jj <= d[0].size(); ++jj) {
            acc.emplace_back(ii, jj);
            enum_alignments(d, ii + 1, jj + 1, acc, best);
            acc.pop_back();
        }
    }
}
} // namespace detail

// Exhaustive oracle for min_over_partial; desk scale only.
inline Rational min_over_partial_enum(const DistMatrix& d, size_t bound = 6) {
    if (d.size() > bound || d[0].size() > bound)
        throw BudgetExceeded("alignment enumeration limited to " +
                             std::to_string(bound) + " per side");
    Rational best = alignment_cost({}, d);
    PartialAlignment acc;
    detail::enum_alignments(d, 1, 1, acc, best);
    return best;
}

struct StructuredMin {
    Rational value;
    long long delta = 0;  // smallest optimal shift
};

// Minimum over shifted diagonals {(delta+1,1),...,(delta+m,m)}.
inline StructuredMin min_over_structured(const DistMatrix& d) {
    const long long n = static_cast<long long>(d.size());
    const long long m = static_cast<long long>(d[0].size());
    StructuredMin best;
    for (long long delta = 0; delta <= n - m; ++delta) {
        Rational sum = 0;
        for (long long j = 1; j <= m; ++j)
            sum += d[static_cast<size_t>(delta + j) - 1][static_cast<size_t>(j) - 1];
        if (delta == 0 || sum < best.value) { best.value = sum; best.delta = delta; }
    }
    return best;
}

struct GadgetOutput {
    Seq x;
    Seq y;
    Rational C;
    TypeDescriptor x_type;
    TypeDescriptor y_type;
};

// Capability bundle for one measure: distances, coordinate values, and the
// two-sided combining gadget. The x/y builders take declared opposite-side
// counts and types (which may differ from the supplied lists) plus z, the
// largest entry over every input of the invocation (only curve measures use
// it).
class MeasureAdapter {
public:
    struct CoordinateValues {
        Seq one_x, zero_x, one_y, zero_y;
        Rational rho0, rho1;
    };

    virtual ~MeasureAdapter() = default;
    virtual std::string name() const = 0;
    virtual bool is_curve_measure() const = 0;
    virtual Rational distance(const Seq& u, const Seq& v) const = 0;
    // String measures expose the cost scheme their traversals are scored
    // under; curve measures have none.
    virtual CostScheme edit_scheme() const {
        throw std::logic_error(name() + " is not an edit-style measure");
    }
    virtual CoordinateValues coords() const = 0;
    virtual Seq build_x(const std::vector<Seq>& xs, long long m_declared,
                        TypeDescriptor t_x, TypeDescriptor t_y, long long z) const = 0;
    virtual Seq build_y(const std::vector<Seq>& ys, long long n_declared,
                        TypeDescriptor t_x, TypeDescriptor t_y, long long z) const = 0;
    virtual Rational offset(long long n, long long m, TypeDescriptor t_x,
                            TypeDescriptor t_y, long long z) const = 0;
    // Predicted output lengths, so callers can budget-check before building.
    virtual long long x_length(long long count, TypeDescriptor t_x,
                               TypeDescriptor t_y, long long z) const = 0;
    virtual long long y_length(long long count, long long n_declared,
                               TypeDescriptor t_x, TypeDescriptor t_y,
                               long long z) const = 0;
    // Consecutive block pairs whose concatenation is the gadget output; the
    // witness builder traverses each block optimally.
    virtual std::vector<std::pair<Seq, Seq>> witness_blocks(
        const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
        long long z) const = 0;
};

inline TypeDescriptor uniform_type(const std::vector<Seq>& seqs, const char* side) {
    if (seqs.empty()) throw TypeMismatch(std::string(side) + ": empty input list");
    TypeDescriptor t = type_of(seqs[0]);
    for (const auto& s : seqs)
        if (!(type_of(s) == t))
            throw TypeMismatch(std::string(side) + ": inputs are not type-uniform");
    return t;
}

inline long long max_entry(const std::vector<Seq>& seqs) {
    long long z = 0;
    for (const auto& s : seqs)
        for (long long v : s) z = std::max(z, v);
    return z;
}

// Two-sided build from actual input lists (declared counts = real counts).
inline GadgetOutput build_gadget(const MeasureAdapter& a,
                                 const std::vector<Seq>& xs,
                                 const std::vector<Seq>& ys) {
    TypeDescriptor tx = uniform_type(xs, "x side");
    TypeDescriptor ty = uniform_type(ys, "y side");
    if (ys.size() > xs.size())
        throw TypeMismatch("gadget needs m <= n");
    long long n = static_cast<long long>(xs.size());
    long long m = static_cast<long long>(ys.size());
    long long z = std::max(max_entry(xs), max_entry(ys));
    GadgetOutput out;
    out.x = a.build_x(xs, m, tx, ty, z);
    out.y = a.build_y(ys, n, tx, ty, z);
    out.C = a.offset(n, m, tx, ty, z);
    out.x_type = type_of(out.x);
    out.y_type = type_of(out.y);
    return out;
}

inline DistMatrix distance_matrix(const MeasureAdapter& a,
                                  const std::vector<Seq>& xs,
                                  const std::vector<Seq>& ys) {
    DistMatrix d(xs.size(), std::vector<Rational>(ys.size()));
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < ys.size(); ++j)
            d[i][j] = a.distance(xs[i], ys[j]);
    return d;
}

struct SandwichReport {
    Rational lower;     // min over partial alignments
    Rational centered;  // delta(x, y) - C
    Rational upper;     // min over structured alignments
    long long delta_star = 0;
    bool holds = false;
};

// Checks lower <= delta(x,y) - C <= upper on a concrete input set.
inline SandwichReport verify_sandwich(const MeasureAdapter& a,
                                      const std::vector<Seq>& xs,
                                      const std::vector<Seq>& ys) {
    GadgetOutput g = build_gadget(a, xs, ys);
    DistMatrix d = distance_matrix(a, xs, ys);
    SandwichReport r;
    r.lower = min_over_partial(d);
    r.centered = a.distance(g.x, g.y) - g.C;
    StructuredMin s = min_over_structured(d);
    r.upper = s.value;
    r.delta_star = s.delta;
    r.holds = (r.lower <= r.centered) && (r.centered <= r.upper);
    return r;
}

// True iff two equal-count, equal-type input sets give gadget outputs with
// identical type descriptors.
inline bool verify_type_uniformity(const MeasureAdapter& a,
                                   const std::vector<Seq>& xs1,
                                   const std::vector<Seq>& ys1,
                                   const std::vector<Seq>& xs2,
                                   const std::vector<Seq>& ys2) {
    if (xs1.size() != xs2.size() || ys1.size() != ys2.size())
        throw TypeMismatch("input sets must have equal counts");
    if (!(uniform_type(xs1, "x side") == uniform_type(xs2, "x side")) ||
        !(uniform_type(ys1, "y side") == uniform_type(ys2, "y side")))
        throw TypeMismatch("input sets must have equal type descriptors");
    GadgetOutput g1 = build_gadget(a, xs1, ys1);
    GadgetOutput g2 = build_gadget(a, xs2, ys2);
    return g1.x_type == g2.x_type && g1.y_type == g2.y_type;
}

} // namespace seqhard
