#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "seqhard/gadgets.hpp"
#include "seqhard/reduction.hpp"

using namespace seqhard;

namespace {

OvInstance make(std::vector<std::vector<uint8_t>> a,
                std::vector<std::vector<uint8_t>> b) {
    OvInstance inst;
    inst.d = static_cast<long long>(a[0].size());
    for (auto& v : a) inst.a_vectors.push_back(BitVec::from_bits(v));
    for (auto& v : b) inst.b_vectors.push_back(BitVec::from_bits(v));
    return inst;
}

std::vector<BitVec> all_vectors(long long d) {
    std::vector<BitVec> out;
    for (long long mask = 0; mask < (1LL << d); ++mask) {
        std::vector<uint8_t> bits;
        for (long long i = 0; i < d; ++i)
            bits.push_back(static_cast<uint8_t>((mask >> i) & 1));
        out.push_back(BitVec::from_bits(bits));
    }
    return out;
}

bool orthogonal(const BitVec& a, const BitVec& b) {
    for (size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i] && b.bits[i]) return false;
    return true;
}

// Distance between one vector's gadgets, minus the level offset.
Rational vg_pair_cost(const MeasureAdapter& a, const ReductionStages& st,
                      const Seq& x, const Seq& y) {
    return a.distance(x, y) - st.C;
}

} // namespace

TEST_CASE("vector-gadget distances detect orthogonality") {
    LcsAdapter lcs;
    EditAdapter edit(Rational(1));
    DtwAdapter dtw;
    struct Cfg { const MeasureAdapter* a; long long max_d; };
    for (Cfg cfg : {Cfg{&lcs, 2}, Cfg{&edit, 1}, Cfg{&dtw, 2}}) {
        for (long long d = 1; d <= cfg.max_d; ++d) {
            auto vecs = all_vectors(d);
            OvInstance inst;
            inst.d = d;
            inst.a_vectors = vecs;
            inst.b_vectors = vecs;
            ReductionStages st = build_vg_level(inst, *cfg.a);
            Rational orth = Rational(d + 1) * st.cv.rho0;
            Rational non_orth = Rational(d) * st.cv.rho0 + st.cv.rho1;
            for (size_t i = 0; i < vecs.size(); ++i) {
                // The reference gadget S always realizes the non-orthogonal cost.
                Rational sref = vg_pair_cost(*cfg.a, st, st.S, st.vg_b[i]);
                INFO(cfg.a->name() << " d=" << d << " i=" << i);
                CHECK(sref == non_orth);
                for (size_t j = 0; j < vecs.size(); ++j) {
                    Rational got = vg_pair_cost(*cfg.a, st, st.vg_a[i], st.vg_b[j]);
                    INFO(cfg.a->name() << " d=" << d << " i=" << i << " j=" << j);
                    if (orthogonal(vecs[i], vecs[j])) CHECK(got == orth);
                    else CHECK(got >= non_orth);
                }
            }
        }
    }
}

TEST_CASE("normalized gadgets take exactly two values for dtw") {
    DtwAdapter a;
    for (long long d = 1; d <= 2; ++d) {
        auto vecs = all_vectors(d);
        OvInstance inst;
        inst.d = d;
        inst.a_vectors = vecs;
        inst.b_vectors = vecs;
        ReductionStages st = build_stages(inst, a);
        for (size_t i = 0; i < vecs.size(); ++i) {
            for (size_t j = 0; j < vecs.size(); ++j) {
                Rational got = a.distance(st.nvg_a[i], st.nvg_b[j]);
                INFO("d=" << d << " i=" << i << " j=" << j);
                if (orthogonal(vecs[i], vecs[j])) CHECK(got == st.rhoPrime0);
                else CHECK(got == st.rhoPrime1);
            }
        }
    }
}

TEST_CASE("transcript invariants") {
    DtwAdapter a;
    OvInstance inst = make({{1, 0}, {0, 1}}, {{1, 1}, {0, 0}});
    ReductionOutput out = ov_to_instance(inst, a);
    const auto& t = out.transcript;
    CHECK(t.d == 2);
    CHECK(t.n == 2);
    CHECK(t.m == 2);
    CHECK(t.rhoPrime0 == t.C + t.CPrime + Rational(t.d + 1) * t.rho0);
    CHECK(t.rhoPrime1 == t.C + t.CPrime + Rational(t.d) * t.rho0 + t.rho1);
    CHECK(t.threshold_rho ==
          t.CPrimePrime + Rational(t.m - 1) * t.rhoPrime1 + t.rhoPrime0);
    CHECK(t.x_len == static_cast<long long>(out.x.size()));
    CHECK(t.y_len == static_cast<long long>(out.y.size()));
    CHECK(t.vg_x_len < t.nvg_a_len);
    CHECK(t.nvg_a_len < t.x_len);
    // Nested plateau doubling keeps the curve alphabet inside {0,1,2,4,8}.
    for (long long v : out.x) CHECK((v == 0 || v == 1 || v == 2 || v == 4 || v == 8));
    for (long long v : out.y) CHECK((v == 0 || v == 1 || v == 2 || v == 4 || v == 8));

    std::string s = t.str();
    for (const char* key : {"d = ", "rho0 = ", "rho = ", "x_len = ", "C_prime_prime = "})
        CHECK(s.find(key) != std::string::npos);
}

TEST_CASE("end-to-end ov decision via dtw on single-vector instances") {
    DtwAdapter a;
    struct Case { uint8_t av, bv; };
    for (Case c : {Case{0, 0}, Case{0, 1}, Case{1, 0}, Case{1, 1}}) {
        OvInstance inst = make({{c.av}}, {{c.bv}});
        bool want = ov_brute_force(inst);
        INFO("a=" << int(c.av) << " b=" << int(c.bv));
        CHECK(decide_ov_via_measure(inst, a) == want);
    }
    // Unbalanced: two a-vectors, one b-vector.
    OvInstance yes = make({{1}, {0}}, {{1}});
    CHECK(decide_ov_via_measure(yes, a));
    OvInstance no = make({{1}, {1}}, {{1}});
    CHECK_FALSE(decide_ov_via_measure(no, a));
}

TEST_CASE("reduction refuses unbalanced and oversized inputs") {
    DtwAdapter dtw;
    OvInstance lopsided = make({{0}}, {{0}, {0}, {0}});
    CHECK_THROWS_AS(ov_to_instance(lopsided, dtw), ParseError);

    OvInstance small = make({{0}}, {{0}});
    CHECK_THROWS_AS(ov_to_instance(small, dtw, 1000), BudgetExceeded);

    LcsAdapter lcs;
    EditAdapter edit(Rational(1));
    // String measures overflow any desk-scale budget even for the tiny case.
    CHECK_THROWS_AS(ov_to_instance(small, lcs, 4'000'000'000ULL), BudgetExceeded);
    CHECK_THROWS_AS(ov_to_instance(small, edit, 4'000'000'000ULL), BudgetExceeded);
}

TEST_CASE("cell budget environment override") {
    unsetenv("SEQHARD_CELL_BUDGET");
    CHECK(cell_budget() == 4'000'000'000ULL);
    setenv("SEQHARD_CELL_BUDGET", "12345", 1);
    CHECK(cell_budget() == 12345ULL);
    setenv("SEQHARD_CELL_BUDGET", "zero", 1);
    CHECK_THROWS_AS(cell_budget(), ParseError);
    unsetenv("SEQHARD_CELL_BUDGET");
}
