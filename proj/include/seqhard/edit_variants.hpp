#pragma once

#include <cassert>
#include <stdexcept>

#include "seqhard/measures.hpp"
#include "seqhard/sequence.hpp"

namespace seqhard {

struct NotTrivial : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotHard : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonBinaryAlphabet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class VariantKind {
    TrivialMatchEqualsSubst,   // c_match = c_subst
    TrivialDeletionsDominate,  // c_del_x + c_del_y <= min{c_match, c_subst}
    Hard,
};

// delta_canonical = mul * delta_original + off, and back.
struct AffineMap {
    Rational mul = 1;
    Rational off = 0;
    Rational apply(const Rational& v) const { return mul * v + off; }
    Rational invert(const Rational& v) const { return (v - off) / mul; }
};

struct VariantClassification {
    VariantKind kind;
    bool flip_y = false;             // Hard only: flip y's bits first
    Rational alpha = 1;              // Hard only: 2/(c_del_x+c_del_y-c_match)
    Rational canonical_c_subst = 0;  // Hard only: in (0,2] after clamping
    bool clamped = false;            // canonical_c_subst hit the cap of 2

    bool is_trivial() const { return kind != VariantKind::Hard; }
};

// Constant-time case analysis of a cost scheme. For Hard schemes, flipping
// y's bits (binary alphabet) swaps the roles of match and substitution, so
// the analysis may assume c_subst > c_match afterwards.
inline VariantClassification classify(const CostScheme& c) {
    bool match_eq_subst = (c.match == c.subst);
    bool deletions_dominate =
        (c.del_x + c.del_y <= (c.match < c.subst ? c.match : c.subst));
    if (match_eq_subst)
        return {VariantKind::TrivialMatchEqualsSubst};
    if (deletions_dominate)
        return {VariantKind::TrivialDeletionsDominate};

    VariantClassification r{VariantKind::Hard};
    r.flip_y = (c.subst < c.match);
    Rational cm = r.flip_y ? c.subst : c.match;
    Rational cs = r.flip_y ? c.match : c.subst;
    r.alpha = Rational(2) / (c.del_x + c.del_y - cm);
    Rational cp = r.alpha * (cs - cm);
    if (cp > Rational(2)) {
        r.canonical_c_subst = 2;
        r.clamped = true;
    } else {
        r.canonical_c_subst = cp;
    }
    return r;
}

// Closed-form optimum for the trivial kinds; requires n >= m.
inline Rational trivial_value(const CostScheme& c, long long n, long long m) {
    VariantClassification cls = classify(c);
    if (!cls.is_trivial())
        throw NotTrivial("trivial_value called on a hard cost scheme");
    assert(n >= m);
    Rational sum_del = c.del_x + c.del_y;
    Rational by_match =
        Rational(m) * (c.match < sum_del ? c.match : sum_del)
        + Rational(n - m) * c.del_x;
    Rational by_delete = Rational(n) * c.del_x + Rational(m) * c.del_y;
    if (cls.kind == VariantKind::TrivialMatchEqualsSubst) {
        if (sum_del <= (c.match < c.subst ? c.match : c.subst))
            assert(by_match == by_delete);
        return by_match;
    }
    return by_delete;
}

struct CanonicalInstance {
    CostScheme costs;  // (1, 1, 0, c')
    Seq x;
    Seq y;             // bit-flipped iff the classification says so
    AffineMap map;     // original distance -> canonical distance
    VariantClassification cls;
};

// Reduces a hard scheme on binary strings to Edit(1,1,0,c'): the canonical
// distance of (x', y') equals alpha * original - alpha*m*c_match +
// (n-m)*(1 - alpha*c_del_x), with n = |x|, m = |y|. When c' was clamped to 2
// the identity holds for optima (a substitution above cost 2 is never
// optimal), not for arbitrary traversals.
inline CanonicalInstance canonicalize(const CostScheme& c, const Seq& x, const Seq& y) {
    VariantClassification cls = classify(c);
    if (cls.is_trivial())
        throw NotHard("canonicalize called on a trivial cost scheme");
    if (!is_binary(x) || !is_binary(y))
        throw NonBinaryAlphabet("canonicalize needs binary strings");

    const long long n = static_cast<long long>(x.size());
    const long long m = static_cast<long long>(y.size());
    Rational cm = cls.flip_y ? c.subst : c.match;

    CanonicalInstance out;
    out.costs = {1, 1, 0, cls.canonical_c_subst};
    out.x = x;
    out.y = cls.flip_y ? flipped_bits(y) : y;
    out.map.mul = cls.alpha;
    out.map.off = -cls.alpha * Rational(m) * cm
                + Rational(n - m) * (Rational(1) - cls.alpha * c.del_x);
    out.cls = cls;
    return out;
}

} // namespace seqhard
