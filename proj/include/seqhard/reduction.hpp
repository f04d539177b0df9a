#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "seqhard/alignment.hpp"
#include "seqhard/ov.hpp"
#include "seqhard/sequence.hpp"

namespace seqhard {

// Maximum |x|*|y| DP cells the pipeline will accept; override with the
// SEQHARD_CELL_BUDGET environment variable.
inline unsigned long long cell_budget() {
    if (const char* e = std::getenv("SEQHARD_CELL_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("SEQHARD_CELL_BUDGET must be a positive integer");
    }
    return 4'000'000'000ULL;
}

struct ReductionTranscript {
    long long d = 0, n = 0, m = 0;
    Rational rho0, rho1;            // coordinate-value distances
    Rational C, CPrime, CPrimePrime;  // offsets of the three gadget levels
    Rational rhoPrime0, rhoPrime1;  // vector-pair distances (orthogonal / not)
    Rational threshold_rho;
    long long vg_x_len = 0, vg_y_len = 0;
    long long nvg_a_len = 0, nvg_b_len = 0;
    long long x_len = 0, y_len = 0;

    std::string str() const {
        std::string out;
        auto kv = [&](const char* k, const std::string& v) {
            out += k; out += " = "; out += v; out += "\n";
        };
        kv("d", std::to_string(d));
        kv("n", std::to_string(n));
        kv("m", std::to_string(m));
        kv("rho0", rho0.str());
        kv("rho1", rho1.str());
        kv("C", C.str());
        kv("C_prime", CPrime.str());
        kv("C_prime_prime", CPrimePrime.str());
        kv("rho_prime0", rhoPrime0.str());
        kv("rho_prime1", rhoPrime1.str());
        kv("rho", threshold_rho.str());
        kv("vg_x_len", std::to_string(vg_x_len));
        kv("vg_y_len", std::to_string(vg_y_len));
        kv("nvg_a_len", std::to_string(nvg_a_len));
        kv("nvg_b_len", std::to_string(nvg_b_len));
        kv("x_len", std::to_string(x_len));
        kv("y_len", std::to_string(y_len));
        return out;
    }
};

// Everything up to (but excluding) the final combining step; small enough to
// build eagerly for any desk-scale instance.
struct ReductionStages {
    long long d = 0, n = 0, m = 0;
    MeasureAdapter::CoordinateValues cv;
    std::vector<Seq> vg_a, vg_b;  // vector gadgets
    Seq S;                        // the all-free reference vector gadget
    Rational C;                   // vector-gadget offset
    std::vector<Seq> nvg_a, nvg_b;  // normalized vector gadgets
    Rational CPrime;              // normalization offset
    Rational rhoPrime0, rhoPrime1;
};

// Coordinate gadgets: one value per coordinate plus a trailing sentinel that
// is free on the a-side (0_x) and blocking on the b-side (1_y), making the
// vector-pair distance detect orthogonality.
inline std::vector<Seq> coordinate_gadgets_a(const BitVec& a,
                                             const MeasureAdapter::CoordinateValues& cv) {
    std::vector<Seq> out;
    for (uint8_t bit : a.bits) out.push_back(bit ? cv.one_x : cv.zero_x);
    out.push_back(cv.zero_x);
    return out;
}

inline std::vector<Seq> coordinate_gadgets_b(const BitVec& b,
                                             const MeasureAdapter::CoordinateValues& cv) {
    std::vector<Seq> out;
    for (uint8_t bit : b.bits) out.push_back(bit ? cv.one_y : cv.zero_y);
    out.push_back(cv.one_y);
    return out;
}

// First stage only (vector gadgets); the normalized gadgets of the string
// measures are orders of magnitude larger, so callers that only need the
// vector level should stop here.
inline ReductionStages build_vg_level(const OvInstance& inst, const MeasureAdapter& a) {
    inst.check();
    ReductionStages st;
    st.d = inst.d;
    st.n = inst.n();
    st.m = inst.m();
    st.cv = a.coords();

    TypeDescriptor t_cgx = type_of(st.cv.zero_x);
    TypeDescriptor t_cgy = type_of(st.cv.zero_y);
    long long z1 = std::max(
        max_entry({st.cv.one_x, st.cv.zero_x}),
        max_entry({st.cv.one_y, st.cv.zero_y}));

    // Vector gadgets: combine the d+1 coordinate gadgets of each vector.
    for (const auto& av : inst.a_vectors)
        st.vg_a.push_back(a.build_x(coordinate_gadgets_a(av, st.cv),
                                    st.d + 1, t_cgx, t_cgy, z1));
    for (const auto& bv : inst.b_vectors)
        st.vg_b.push_back(a.build_y(coordinate_gadgets_b(bv, st.cv),
                                    st.d + 1, t_cgx, t_cgy, z1));
    st.C = a.offset(st.d + 1, st.d + 1, t_cgx, t_cgy, z1);

    std::vector<Seq> s_inputs(static_cast<size_t>(st.d), st.cv.zero_x);
    s_inputs.push_back(st.cv.one_x);
    st.S = a.build_x(s_inputs, st.d + 1, t_cgx, t_cgy, z1);
    return st;
}

inline ReductionStages build_stages(const OvInstance& inst, const MeasureAdapter& a) {
    ReductionStages st = build_vg_level(inst, a);

    // Normalization: pair every a-side vector gadget with the reference S
    // (two x-inputs against one declared y-input); b-side gadgets are wrapped
    // alone against two declared x-inputs.
    TypeDescriptor t_vgx = type_of(st.S);
    TypeDescriptor t_vgy = type_of(st.vg_b[0]);
    std::vector<Seq> all_vg = st.vg_a;
    all_vg.push_back(st.S);
    long long z2 = std::max(max_entry(all_vg), max_entry(st.vg_b));

    for (const auto& vg : st.vg_a)
        st.nvg_a.push_back(a.build_x({st.S, vg}, 1, t_vgx, t_vgy, z2));
    for (const auto& vg : st.vg_b)
        st.nvg_b.push_back(a.build_y({vg}, 2, t_vgx, t_vgy, z2));
    st.CPrime = a.offset(2, 1, t_vgx, t_vgy, z2);

    st.rhoPrime0 = st.C + st.CPrime + Rational(st.d + 1) * st.cv.rho0;
    st.rhoPrime1 = st.C + st.CPrime + Rational(st.d) * st.cv.rho0 + st.cv.rho1;
    return st;
}

struct ReductionOutput {
    Seq x;
    Seq y;
    ReductionTranscript transcript;
};

// Full compiler: the final instance concatenates the normalized a-side
// gadgets twice (realizing all cyclic shifts) against the m b-side gadgets,
// and the decision threshold charges m-1 non-orthogonal pairs plus one
// orthogonal pair.
inline ReductionOutput ov_to_instance(const OvInstance& inst, const MeasureAdapter& a,
                                      unsigned long long budget = cell_budget()) {
    ReductionStages st = build_stages(inst, a);
    if (st.m > 2 * st.n)
        throw ParseError("reduction requires m <= 2n");

    TypeDescriptor t_nx = type_of(st.nvg_a[0]);
    TypeDescriptor t_ny = type_of(st.nvg_b[0]);
    long long z3 = std::max(max_entry(st.nvg_a), max_entry(st.nvg_b));

    ReductionOutput out;
    auto& t = out.transcript;
    t.d = st.d; t.n = st.n; t.m = st.m;
    t.rho0 = st.cv.rho0; t.rho1 = st.cv.rho1;
    t.C = st.C; t.CPrime = st.CPrime;
    t.rhoPrime0 = st.rhoPrime0; t.rhoPrime1 = st.rhoPrime1;
    t.vg_x_len = static_cast<long long>(st.vg_a[0].size());
    t.vg_y_len = static_cast<long long>(st.vg_b[0].size());
    t.nvg_a_len = static_cast<long long>(st.nvg_a[0].size());
    t.nvg_b_len = static_cast<long long>(st.nvg_b[0].size());
    t.x_len = a.x_length(2 * st.n, t_nx, t_ny, z3);
    t.y_len = a.y_length(st.m, 2 * st.n, t_nx, t_ny, z3);
    if (static_cast<unsigned long long>(t.x_len) *
            static_cast<unsigned long long>(t.y_len) > budget)
        throw BudgetExceeded("projected instance needs " + std::to_string(t.x_len) +
                             " x " + std::to_string(t.y_len) +
                             " DP cells, over the configured budget");

    std::vector<Seq> doubled = st.nvg_a;
    doubled.insert(doubled.end(), st.nvg_a.begin(), st.nvg_a.end());
    out.x = a.build_x(doubled, st.m, t_nx, t_ny, z3);
    out.y = a.build_y(st.nvg_b, 2 * st.n, t_nx, t_ny, z3);
    t.CPrimePrime = a.offset(2 * st.n, st.m, t_nx, t_ny, z3);
    t.threshold_rho = t.CPrimePrime + Rational(st.m - 1) * st.rhoPrime1 + st.rhoPrime0;

    if (static_cast<long long>(out.x.size()) != t.x_len ||
        static_cast<long long>(out.y.size()) != t.y_len)
        throw std::logic_error("predicted gadget sizes disagree with construction");
    return out;
}

// Decides OV by thresholding the measure distance of the compiled instance.
inline bool decide_ov_via_measure(const OvInstance& inst, const MeasureAdapter& a,
                                  unsigned long long budget = cell_budget()) {
    ReductionOutput r = ov_to_instance(inst, a, budget);
    return a.distance(r.x, r.y) <= r.transcript.threshold_rho;
}

} // namespace seqhard
