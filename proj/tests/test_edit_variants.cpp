#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "seqhard/edit_variants.hpp"

using namespace seqhard;

namespace {
Seq random_bits(std::mt19937_64& rng, size_t len) {
    Seq s;
    for (size_t i = 0; i < len; ++i) s.push_back(static_cast<long long>(rng() & 1));
    return s;
}

Rational random_cost(std::mt19937_64& rng) {
    long long den = 1 + static_cast<long long>(rng() % 4);
    long long num = static_cast<long long>(rng() % (6 * den + 1)) - 3 * den;
    return Rational(num, den);
}
} // namespace

TEST_CASE("classification of the named schemes") {
    auto lev = classify(CostScheme::levenshtein());
    CHECK(lev.kind == VariantKind::Hard);
    CHECK_FALSE(lev.flip_y);
    CHECK(lev.alpha == Rational(1));
    CHECK(lev.canonical_c_subst == Rational(1));

    auto lcs = classify(CostScheme::lcs());
    CHECK(lcs.kind == VariantKind::Hard);
    CHECK(lcs.canonical_c_subst == Rational(2));
    CHECK_FALSE(lcs.clamped);

    CHECK(classify({1, 1, 3, 3}).is_trivial());
    CHECK(classify({1, 1, 2, 2}).kind == VariantKind::TrivialMatchEqualsSubst);
    CHECK(classify({1, 1, 3, 4}).kind == VariantKind::TrivialDeletionsDominate);

    auto dna = classify({2, 2, -1, 1});
    CHECK(dna.kind == VariantKind::Hard);
    CHECK_FALSE(dna.flip_y);
    CHECK(dna.alpha == Rational(2, 5));
    CHECK(dna.canonical_c_subst == Rational(4, 5));

    auto flipped = classify({1, 1, 2, 0});  // substitutions cheaper than matches
    CHECK(flipped.kind == VariantKind::Hard);
    CHECK(flipped.flip_y);
}

TEST_CASE("classification is exhaustive and exclusive") {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 500; ++t) {
        CostScheme c{random_cost(rng), random_cost(rng), random_cost(rng),
                     random_cost(rng)};
        auto cls = classify(c);
        bool me = (c.match == c.subst);
        bool dd = (c.del_x + c.del_y <= (c.match < c.subst ? c.match : c.subst));
        if (me) CHECK(cls.kind == VariantKind::TrivialMatchEqualsSubst);
        else if (dd) CHECK(cls.kind == VariantKind::TrivialDeletionsDominate);
        else CHECK(cls.kind == VariantKind::Hard);
    }
}

TEST_CASE("trivial closed forms match the DP") {
    std::mt19937_64 rng(67);
    CHECK(trivial_value({1, 1, 3, 3}, 4, 2) == Rational(6));
    CHECK(trivial_value({1, 1, 2, 2}, 3, 3) == Rational(6));
    CHECK(trivial_value({1, 1, 2, 2}, 0, 0) == Rational(0));
    CHECK_THROWS_AS(trivial_value(CostScheme::levenshtein(), 3, 2), NotTrivial);
    for (int t = 0; t < 300; ++t) {
        CostScheme c{random_cost(rng), random_cost(rng), random_cost(rng),
                     random_cost(rng)};
        if (!classify(c).is_trivial()) continue;
        Seq x = random_bits(rng, 1 + rng() % 7);
        Seq y = random_bits(rng, rng() % (x.size() + 1));
        CHECK(trivial_value(c, static_cast<long long>(x.size()),
                            static_cast<long long>(y.size())) == edit_dp(x, y, c));
    }
}

TEST_CASE("canonicalize affine identity") {
    std::mt19937_64 rng(71);
    int hard_seen = 0, flip_seen = 0;
    for (int t = 0; t < 2000 && (hard_seen < 200 || flip_seen < 20); ++t) {
        CostScheme c{random_cost(rng), random_cost(rng), random_cost(rng),
                     random_cost(rng)};
        auto cls = classify(c);
        if (cls.is_trivial()) continue;
        ++hard_seen;
        if (cls.flip_y) ++flip_seen;
        Seq x = random_bits(rng, rng() % 9), y = random_bits(rng, rng() % 9);
        auto can = canonicalize(c, x, y);
        CHECK(can.costs.del_x == Rational(1));
        CHECK(can.costs.del_y == Rational(1));
        CHECK(can.costs.match == Rational(0));
        CHECK(Rational(0) < can.costs.subst);
        CHECK(can.costs.subst <= Rational(2));
        Rational canonical = edit_dp(can.x, can.y, can.costs);
        Rational mapped = can.map.apply(edit_dp(x, y, c));
        CHECK(canonical == mapped);
        CHECK(can.map.invert(canonical) == edit_dp(x, y, c));
    }
    CHECK(hard_seen >= 200);
    CHECK(flip_seen >= 20);
}

TEST_CASE("canonicalize on an already canonical scheme is the identity map") {
    std::mt19937_64 rng(73);
    for (auto c : {Rational(1, 2), Rational(1), Rational(2)}) {
        Seq x = random_bits(rng, 6), y = random_bits(rng, 4);
        auto can = canonicalize(CostScheme::canonical(c), x, y);
        CHECK(can.costs.subst == c);
        CHECK(can.x == x);
        CHECK(can.y == y);
        CHECK(can.map.mul == Rational(1));
        CHECK(can.map.off == Rational(0));
    }
}

TEST_CASE("canonicalize error cases") {
    Seq x{0, 1}, y{1, 0};
    CHECK_THROWS_AS(canonicalize({1, 1, 2, 2}, x, y), NotHard);
    CHECK_THROWS_AS(canonicalize(CostScheme::levenshtein(), Seq{0, 2}, y),
                    NonBinaryAlphabet);
}

TEST_CASE("clamped schemes still map optima exactly") {
    // c' = alpha*(c_subst - c_match) > 2 forces the clamp; optima agree
    // because a substitution above cost 2 never beats two deletions.
    CostScheme c{1, 1, 0, 10};
    auto cls = classify(c);
    CHECK(cls.clamped);
    CHECK(cls.canonical_c_subst == Rational(2));
    std::mt19937_64 rng(79);
    for (int t = 0; t < 100; ++t) {
        Seq x = random_bits(rng, rng() % 8), y = random_bits(rng, rng() % 8);
        auto can = canonicalize(c, x, y);
        CHECK(edit_dp(can.x, can.y, can.costs) == can.map.apply(edit_dp(x, y, c)));
    }
}
