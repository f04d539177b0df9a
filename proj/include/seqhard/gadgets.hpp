#pragma once

#include <string>
#include <vector>

#include "seqhard/alignment.hpp"
#include "seqhard/measures.hpp"
#include "seqhard/sequence.hpp"
#include "seqhard/traversal.hpp"

namespace seqhard {

struct InvalidCsubst : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {
inline Seq concat(std::initializer_list<Seq> parts) {
    Seq out;
    for (const auto& p : parts) append(out, p);
    return out;
}
} // namespace detail

// ---------------------------------------------------------------------------
// LCS

struct LcsParams {
    long long g1, g2, g3, g4;
    static LcsParams from(TypeDescriptor tx, TypeDescriptor ty) {
        long long l = tx.length + ty.length;
        return {l, 6 * l, 10 * l + 2 * tx.sum - tx.length, 13 * l};
    }
    Seq guard(const Seq& z) const {
        return detail::concat({repeated(1, g2), repeated(0, g1), z,
                               repeated(0, g1), repeated(1, g2)});
    }
};

class LcsAdapter : public MeasureAdapter {
public:
    std::string name() const override { return "lcs"; }
    bool is_curve_measure() const override { return false; }
    CostScheme edit_scheme() const override { return CostScheme::lcs(); }

    Rational distance(const Seq& u, const Seq& v) const override {
        return Rational(delta_lcs(u, v));
    }

    CoordinateValues coords() const override {
        return {{1, 1, 1, 0, 0}, {1, 0, 0, 1, 1},
                {0, 0, 1, 1, 1}, {1, 1, 0, 0, 1},
                Rational(2), Rational(4)};
    }

    Seq build_x(const std::vector<Seq>& xs, long long /*m_declared*/,
                TypeDescriptor t_x, TypeDescriptor t_y, long long) const override {
        LcsParams p = LcsParams::from(t_x, t_y);
        Seq out;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) append(out, repeated(0, p.g3));
            append(out, p.guard(xs[i]));
        }
        return out;
    }

    Seq build_y(const std::vector<Seq>& ys, long long n_declared,
                TypeDescriptor t_x, TypeDescriptor t_y, long long) const override {
        LcsParams p = LcsParams::from(t_x, t_y);
        Seq out = repeated(0, n_declared * p.g4);
        for (size_t j = 0; j < ys.size(); ++j) {
            if (j) append(out, repeated(0, p.g3));
            append(out, p.guard(ys[j]));
        }
        append(out, repeated(0, n_declared * p.g4));
        return out;
    }

    Rational offset(long long n, long long /*m*/, TypeDescriptor t_x,
                    TypeDescriptor t_y, long long) const override {
        return Rational(2 * n * LcsParams::from(t_x, t_y).g4);
    }

    long long x_length(long long count, TypeDescriptor t_x, TypeDescriptor t_y,
                       long long) const override {
        LcsParams p = LcsParams::from(t_x, t_y);
        return count * (t_x.length + 2 * p.g1 + 2 * p.g2) + (count - 1) * p.g3;
    }
    long long y_length(long long count, long long n_declared, TypeDescriptor t_x,
                       TypeDescriptor t_y, long long) const override {
        LcsParams p = LcsParams::from(t_x, t_y);
        return count * (t_y.length + 2 * p.g1 + 2 * p.g2) + (count - 1) * p.g3
             + 2 * n_declared * p.g4;
    }

    std::vector<std::pair<Seq, Seq>> witness_blocks(
        const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
        long long) const override;
};

// ---------------------------------------------------------------------------
// Edit(c_subst), c_subst in (0, 2]

struct EditParams {
    long long rho, g1, g2, g3, g4;
    Rational beta;
    static EditParams from(const Rational& c, TypeDescriptor tx, TypeDescriptor ty) {
        if (!(Rational(0) < c && c <= Rational(2)))
            throw InvalidCsubst("substitution cost must lie in (0, 2]");
        long long l = tx.length + ty.length;
        EditParams p;
        p.rho = 2 * (Rational(1) / c).ceil();
        p.g1 = 10 * p.rho * l;
        p.g2 = 6 * p.rho * p.g1 + 5 * tx.sum - tx.length;
        p.g3 = 2 * p.g2;
        p.g4 = 4 * p.rho * p.g1 + tx.length;
        p.beta = Rational(1) - c / Rational(5);
        return p;
    }
    Seq guard(const Seq& z) const {
        Seq out;
        for (long long r = 0; r < rho; ++r) {
            append(out, repeated(1, g1));
            append(out, repeated(0, g1));
        }
        append(out, z);
        for (long long r = 0; r < rho; ++r) {
            append(out, repeated(0, g1));
            append(out, repeated(1, g1));
        }
        return out;
    }
};

class EditAdapter : public MeasureAdapter {
public:
    explicit EditAdapter(const Rational& c_subst) : c_(c_subst) {
        if (!(Rational(0) < c_ && c_ <= Rational(2)))
            throw InvalidCsubst("substitution cost must lie in (0, 2]");
    }

    std::string name() const override { return "edit(" + c_.str() + ")"; }
    bool is_curve_measure() const override { return false; }
    CostScheme edit_scheme() const override { return CostScheme::canonical(c_); }
    Rational c_subst() const { return c_; }

    Rational distance(const Seq& u, const Seq& v) const override {
        return edit_dp(u, v, edit_scheme());
    }

    CoordinateValues coords() const override {
        Rational two(2), four(4);
        Rational rho0 = (two < two * c_) ? two : two * c_;
        Rational rho1 = (four < four * c_) ? four : four * c_;
        return {{1, 1, 1, 0, 0}, {1, 0, 0, 1, 1},
                {0, 0, 1, 1, 1}, {1, 1, 0, 0, 1},
                rho0, rho1};
    }

    Seq build_x(const std::vector<Seq>& xs, long long /*m_declared*/,
                TypeDescriptor t_x, TypeDescriptor t_y, long long) const override {
        EditParams p = EditParams::from(c_, t_x, t_y);
        Seq out;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) append(out, repeated(0, p.g2));
            append(out, p.guard(xs[i]));
        }
        return out;
    }

    Seq build_y(const std::vector<Seq>& ys, long long n_declared,
                TypeDescriptor t_x, TypeDescriptor t_y, long long) const override {
        EditParams p = EditParams::from(c_, t_x, t_y);
        Seq out = repeated(0, n_declared * p.g3);
        for (size_t j = 0; j < ys.size(); ++j) {
            if (j) append(out, repeated(0, p.g2));
            append(out, p.guard(ys[j]));
        }
        append(out, repeated(0, n_declared * p.g3));
        return out;
    }

    Rational offset(long long n, long long m, TypeDescriptor t_x,
                    TypeDescriptor t_y, long long) const override {
        EditParams p = EditParams::from(c_, t_x, t_y);
        return Rational(2 * n * p.g3) - p.beta * Rational((n - m) * (p.g4 + p.g2));
    }

    long long x_length(long long count, TypeDescriptor t_x, TypeDescriptor t_y,
                       long long) const override {
        EditParams p = EditParams::from(c_, t_x, t_y);
        return count * (t_x.length + 4 * p.rho * p.g1) + (count - 1) * p.g2;
    }
    long long y_length(long long count, long long n_declared, TypeDescriptor t_x,
                       TypeDescriptor t_y, long long) const override {
        EditParams p = EditParams::from(c_, t_x, t_y);
        return count * (t_y.length + 4 * p.rho * p.g1) + (count - 1) * p.g2
             + 2 * n_declared * p.g3;
    }

    std::vector<std::pair<Seq, Seq>> witness_blocks(
        const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
        long long) const override;

private:
    Rational c_;
};

// ---------------------------------------------------------------------------
// DTW over non-negative integer curves

struct DtwParams {
    long long M, kappa;
    static DtwParams from(TypeDescriptor tx, TypeDescriptor ty, long long z) {
        return {2 * z, 3 * (tx.length + ty.length)};
    }
};

class DtwAdapter : public MeasureAdapter {
public:
    std::string name() const override { return "dtw"; }
    bool is_curve_measure() const override { return true; }

    Rational distance(const Seq& u, const Seq& v) const override {
        return Rational(dtw_dp(u, v));
    }

    CoordinateValues coords() const override {
        return {{1, 1, 0, 0}, {0, 1, 1, 0},
                {0, 0, 1, 1}, {1, 0, 1, 0},
                Rational(1), Rational(4)};
    }

    Seq build_x(const std::vector<Seq>& xs, long long /*m_declared*/,
                TypeDescriptor t_x, TypeDescriptor t_y, long long z) const override {
        return interleave(xs, DtwParams::from(t_x, t_y, z));
    }

    Seq build_y(const std::vector<Seq>& ys, long long /*n_declared*/,
                TypeDescriptor t_x, TypeDescriptor t_y, long long z) const override {
        return interleave(ys, DtwParams::from(t_x, t_y, z));
    }

    Rational offset(long long n, long long m, TypeDescriptor t_x,
                    TypeDescriptor /*t_y*/, long long z) const override {
        DtwParams p = DtwParams::from(t_x, t_x, z);  // M depends on z only
        return Rational((n - m) * (t_x.length * p.M - t_x.sum));
    }

    long long x_length(long long count, TypeDescriptor t_x, TypeDescriptor t_y,
                       long long z) const override {
        DtwParams p = DtwParams::from(t_x, t_y, z);
        return (count + 1) * p.kappa + count * t_x.length;
    }
    long long y_length(long long count, long long /*n_declared*/, TypeDescriptor t_x,
                       TypeDescriptor t_y, long long z) const override {
        DtwParams p = DtwParams::from(t_x, t_y, z);
        return (count + 1) * p.kappa + count * t_y.length;
    }

    std::vector<std::pair<Seq, Seq>> witness_blocks(
        const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
        long long z) const override;

private:
    static Seq interleave(const std::vector<Seq>& seqs, DtwParams p) {
        Seq out = repeated(p.M, p.kappa);
        for (const auto& s : seqs) {
            append(out, s);
            append(out, repeated(p.M, p.kappa));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Witness block partitions (the ordered partitions behind the structured
// upper-bound arguments: unaligned outer blocks absorb the padding, aligned
// middle blocks pair guarded inputs one-to-one).

namespace detail {

template <typename Params>
std::vector<std::pair<Seq, Seq>> string_witness_blocks(
    const Params& p, long long sep, long long pad,
    const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta) {
    const long long n = static_cast<long long>(xs.size());
    const long long m = static_cast<long long>(ys.size());
    std::vector<std::pair<Seq, Seq>> blocks;

    Seq left;
    for (long long i = 0; i < delta; ++i) {
        append(left, p.guard(xs[static_cast<size_t>(i)]));
        append(left, repeated(0, sep));
    }
    blocks.emplace_back(left, repeated(0, pad));

    for (long long j = 0; j < m; ++j) {
        if (j) blocks.emplace_back(repeated(0, sep), repeated(0, sep));
        blocks.emplace_back(p.guard(xs[static_cast<size_t>(delta + j)]),
                            p.guard(ys[static_cast<size_t>(j)]));
    }

    Seq right;
    for (long long i = delta + m; i < n; ++i) {
        append(right, repeated(0, sep));
        append(right, p.guard(xs[static_cast<size_t>(i)]));
    }
    blocks.emplace_back(right, repeated(0, pad));
    return blocks;
}

} // namespace detail

inline std::vector<std::pair<Seq, Seq>> LcsAdapter::witness_blocks(
    const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
    long long) const {
    TypeDescriptor tx = uniform_type(xs, "x side"), ty = uniform_type(ys, "y side");
    LcsParams p = LcsParams::from(tx, ty);
    return detail::string_witness_blocks(
        p, p.g3, static_cast<long long>(xs.size()) * p.g4, xs, ys, delta);
}

inline std::vector<std::pair<Seq, Seq>> EditAdapter::witness_blocks(
    const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
    long long) const {
    TypeDescriptor tx = uniform_type(xs, "x side"), ty = uniform_type(ys, "y side");
    EditParams p = EditParams::from(c_, tx, ty);
    return detail::string_witness_blocks(
        p, p.g2, static_cast<long long>(xs.size()) * p.g3, xs, ys, delta);
}

inline std::vector<std::pair<Seq, Seq>> DtwAdapter::witness_blocks(
    const std::vector<Seq>& xs, const std::vector<Seq>& ys, long long delta,
    long long z) const {
    TypeDescriptor tx = uniform_type(xs, "x side"), ty = uniform_type(ys, "y side");
    DtwParams p = DtwParams::from(tx, ty, z);
    const long long n = static_cast<long long>(xs.size());
    const long long m = static_cast<long long>(ys.size());
    Seq mk = repeated(p.M, p.kappa);
    std::vector<std::pair<Seq, Seq>> blocks;

    // Leading x-blocks walk against y's very first symbol M.
    if (delta > 0) {
        Seq left;
        for (long long i = 0; i < delta; ++i) {
            append(left, mk);
            append(left, xs[static_cast<size_t>(i)]);
        }
        blocks.emplace_back(left, Seq{p.M});
    }

    Seq mid = mk;
    for (long long j = 0; j < m; ++j) {
        append(mid, xs[static_cast<size_t>(delta + j)]);
        append(mid, mk);
    }
    Seq ymid;
    {
        Seq yfull = mk;
        for (long long j = 0; j < m; ++j) {
            append(yfull, ys[static_cast<size_t>(j)]);
            append(yfull, mk);
        }
        size_t lo = (delta > 0) ? 1 : 0;
        size_t hi = yfull.size() - ((delta < n - m) ? 1 : 0);
        ymid.assign(yfull.begin() + lo, yfull.begin() + hi);
    }
    blocks.emplace_back(mid, ymid);

    // Trailing x-blocks walk against y's very last symbol M.
    if (delta < n - m) {
        Seq right;
        for (long long i = delta + m; i < n; ++i) {
            append(right, xs[static_cast<size_t>(i)]);
            append(right, mk);
        }
        blocks.emplace_back(right, Seq{p.M});
    }
    return blocks;
}

// Builds a valid traversal of the gadget output realizing the structured
// alignment with shift delta, by optimally traversing each witness block.
inline Traversal structured_witness(const MeasureAdapter& a,
                                    const std::vector<Seq>& xs,
                                    const std::vector<Seq>& ys, long long delta) {
    const long long n = static_cast<long long>(xs.size());
    const long long m = static_cast<long long>(ys.size());
    if (delta < 0 || delta > n - m)
        throw InvalidShift("shift must lie in [0, n-m]");
    long long z = std::max(max_entry(xs), max_entry(ys));
    auto blocks = a.witness_blocks(xs, ys, delta, z);

    Traversal t;
    if (a.is_curve_measure()) {
        long long oa = 0, ob = 0;
        for (const auto& [bx, by] : blocks) {
            for (auto [p, q] : dtw_dp_path(bx, by))
                t.emplace_back(oa + p, ob + q);
            oa += static_cast<long long>(bx.size());
            ob += static_cast<long long>(by.size());
        }
    } else {
        ScaledCosts sc = ScaledCosts::from(a.edit_scheme());
        long long ca = 1, cb = 1;
        t.emplace_back(ca, cb);
        for (const auto& [bx, by] : blocks) {
            for (EditOp op : edit_dp_path(bx, by, sc)) {
                if (op != EditOp::DelY) ++ca;
                if (op != EditOp::DelX) ++cb;
                t.emplace_back(ca, cb);
            }
        }
    }
    return t;
}

// Cost of a witness traversal under the adapter's measure.
inline Rational witness_cost(const MeasureAdapter& a, const GadgetOutput& g,
                             const Traversal& t) {
    if (a.is_curve_measure()) return traversal_cost_dtw(t, g.x, g.y);
    return traversal_cost_edit(t, g.x, g.y, a.edit_scheme());
}

// ---------------------------------------------------------------------------
// LCS -> LPS / LTS reducers

struct LcsReduction {
    Seq z;
    long long kappa;
};

// lps_length(z) = 3*kappa + 2*lcs_length(x, y).
inline LcsReduction lps_from_lcs(const Seq& x, const Seq& y) {
    long long kappa = 2 * (static_cast<long long>(x.size()) +
                           static_cast<long long>(y.size()) + 1);
    Seq z = x;
    append(z, repeated(0, kappa));
    append(z, repeated(1, kappa));
    append(z, repeated(0, kappa));
    append(z, reversed(y));
    return {z, kappa};
}

// lts_length(z) = 4*kappa + 2*lcs_length(x, y).
inline LcsReduction lts_from_lcs(const Seq& x, const Seq& y) {
    long long kappa = static_cast<long long>(x.size()) +
                      static_cast<long long>(y.size());
    Seq z = repeated(0, kappa);
    append(z, x);
    append(z, repeated(1, kappa));
    append(z, repeated(0, kappa));
    append(z, y);
    append(z, repeated(1, kappa));
    return {z, kappa};
}

} // namespace seqhard
