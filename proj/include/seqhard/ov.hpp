#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "seqhard/rational.hpp"
#include "seqhard/sequence.hpp"

namespace seqhard {

// A {0,1}-vector stored both as plain bits and as packed 64-bit words so the
// inner-product test has a fast path and a scalar path to check it against.
struct BitVec {
    std::vector<uint8_t> bits;
    std::vector<uint64_t> words;

    static BitVec from_bits(const std::vector<uint8_t>& b) {
        BitVec v;
        v.bits = b;
        v.words.assign((b.size() + 63) / 64, 0);
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i]) v.words[i / 64] |= (uint64_t{1} << (i % 64));
        return v;
    }

    size_t size() const { return bits.size(); }

    bool orthogonal_packed(const BitVec& o) const {
        for (size_t w = 0; w < words.size(); ++w)
            if (words[w] & o.words[w]) return false;
        return true;
    }
    bool orthogonal_scalar(const BitVec& o) const {
        for (size_t i = 0; i < bits.size(); ++i)
            if (bits[i] && o.bits[i]) return false;
        return true;
    }
};

struct OvInstance {
    std::vector<BitVec> a_vectors;
    std::vector<BitVec> b_vectors;
    long long d = 0;

    long long n() const { return static_cast<long long>(a_vectors.size()); }
    long long m() const { return static_cast<long long>(b_vectors.size()); }

    void check() const {
        if (a_vectors.empty() || b_vectors.empty() || d < 1)
            throw ParseError("OV instance needs n >= 1, m >= 1, d >= 1");
        for (const auto& v : a_vectors)
            if (static_cast<long long>(v.size()) != d)
                throw ParseError("a-vector with wrong dimension");
        for (const auto& v : b_vectors)
            if (static_cast<long long>(v.size()) != d)
                throw ParseError("b-vector with wrong dimension");
    }
};

// True iff some pair (a_i, b_j) has inner product 0.
inline bool ov_brute_force(const OvInstance& inst, bool use_packed = true) {
    for (const auto& a : inst.a_vectors)
        for (const auto& b : inst.b_vectors)
            if (use_packed ? a.orthogonal_packed(b) : a.orthogonal_scalar(b))
                return true;
    return false;
}

inline OvInstance gen_random(long long n, long long m, long long d,
                             const Rational& one_density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Exact density: a draw below num/den * 2^63 is a one.
    auto bit = [&]() {
        const uint64_t span = uint64_t{1} << 63;
        uint64_t threshold =
            static_cast<uint64_t>(static_cast<unsigned __int128>(span) *
                                  one_density.num() / one_density.den());
        return static_cast<uint8_t>((rng() >> 1) < threshold);
    };
    auto draw = [&](long long count) {
        std::vector<BitVec> out;
        for (long long i = 0; i < count; ++i) {
            std::vector<uint8_t> bits(static_cast<size_t>(d));
            for (auto& x : bits) x = bit();
            out.push_back(BitVec::from_bits(bits));
        }
        return out;
    };
    OvInstance inst;
    inst.d = d;
    inst.a_vectors = draw(n);
    inst.b_vectors = draw(m);
    return inst;
}

// Random instance with one (a, b) pair rewritten to disjoint supports, so an
// orthogonal pair is guaranteed.
inline OvInstance gen_planted(long long n, long long m, long long d, uint64_t seed) {
    OvInstance inst = gen_random(n, m, d, Rational(1, 2), seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    size_t ai = rng() % inst.a_vectors.size();
    size_t bj = rng() % inst.b_vectors.size();
    std::vector<uint8_t> a(static_cast<size_t>(d)), b(static_cast<size_t>(d));
    for (long long i = 0; i < d; ++i) {
        uint8_t side = rng() & 1;  // each coordinate is free on exactly one side
        a[static_cast<size_t>(i)] = side & (rng() & 1);
        b[static_cast<size_t>(i)] = (1 - side) & (rng() & 1);
    }
    inst.a_vectors[ai] = BitVec::from_bits(a);
    inst.b_vectors[bj] = BitVec::from_bits(b);
    return inst;
}

struct CnfFormula {
    long long variable_count = 0;
    std::vector<std::vector<long long>> clauses;  // signed DIMACS literals

    void check() const {
        if (variable_count < 1) throw ParseError("CNF needs at least one variable");
        for (const auto& cl : clauses) {
            if (cl.empty()) throw ParseError("empty clause");
            for (long long lit : cl)
                if (lit == 0 || std::llabs(lit) > variable_count)
                    throw ParseError("literal out of range");
        }
    }

    bool satisfied_by(uint64_t assignment) const {  // bit v-1 = value of var v
        for (const auto& cl : clauses) {
            bool sat = false;
            for (long long lit : cl) {
                bool val = (assignment >> (std::llabs(lit) - 1)) & 1;
                if ((lit > 0) == val) { sat = true; break; }
            }
            if (!sat) return false;
        }
        return true;
    }
};

inline bool sat_brute_force(const CnfFormula& f) {
    if (f.variable_count > 30)
        throw BudgetExceeded("truth-table enumeration limited to 30 variables");
    uint64_t total = uint64_t{1} << f.variable_count;
    for (uint64_t a = 0; a < total; ++a)
        if (f.satisfied_by(a)) return true;
    return false;
}

inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    bool header_seen = false;
    long long declared_clauses = -1;
    std::vector<long long> current;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (!(ls >> p >> fmt >> f.variable_count >> declared_clauses) || fmt != "cnf")
                throw ParseError("bad DIMACS header");
            header_seen = true;
            continue;
        }
        long long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) throw ParseError("empty clause in DIMACS input");
                f.clauses.push_back(current);
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
    }
    if (!header_seen) throw ParseError("missing DIMACS 'p cnf' header");
    if (!current.empty()) f.clauses.push_back(current);
    if (declared_clauses >= 0 &&
        declared_clauses != static_cast<long long>(f.clauses.size()))
        throw ParseError("DIMACS clause count mismatch");
    f.check();
    return f;
}

inline CnfFormula load_dimacs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_dimacs(in);
}

// Split-and-enumerate reduction: one a-vector per assignment of the first
// ceil(left_fraction * N) variables, one b-vector per assignment of the rest;
// coordinate i is 0 iff the half-assignment already satisfies clause i. The
// result has an orthogonal pair iff the formula is satisfiable.
inline OvInstance cnf_to_ov(const CnfFormula& f, const Rational& left_fraction,
                            uint64_t vector_budget = uint64_t{1} << 24) {
    f.check();
    if (!(Rational(0) < left_fraction && left_fraction < Rational(1)))
        throw ParseError("left fraction must lie strictly between 0 and 1");
    long long left = (left_fraction * Rational(f.variable_count)).ceil();
    if (left < 1) left = 1;
    if (left >= f.variable_count) left = f.variable_count - 1;
    long long right = f.variable_count - left;
    if (left > 62 || right > 62 ||
        (uint64_t{1} << left) + (uint64_t{1} << right) > vector_budget)
        throw BudgetExceeded("half-assignment enumeration exceeds vector budget");

    long long d = static_cast<long long>(f.clauses.size());
    auto build = [&](long long var_lo, long long var_count) {
        std::vector<BitVec> out;
        for (uint64_t asn = 0; asn < (uint64_t{1} << var_count); ++asn) {
            std::vector<uint8_t> bits(static_cast<size_t>(d), 1);
            for (long long i = 0; i < d; ++i) {
                bool sat = false;
                for (long long lit : f.clauses[static_cast<size_t>(i)]) {
                    long long v = std::llabs(lit);
                    if (v <= var_lo || v > var_lo + var_count) continue;
                    bool val = (asn >> (v - var_lo - 1)) & 1;
                    if ((lit > 0) == val) { sat = true; break; }
                }
                if (sat) bits[static_cast<size_t>(i)] = 0;
            }
            out.push_back(BitVec::from_bits(bits));
        }
        return out;
    };
    OvInstance inst;
    inst.d = d;
    inst.a_vectors = build(0, left);
    inst.b_vectors = build(left, right);
    return inst;
}

// Text format: "n m d" on the first line, then n a-rows and m b-rows of d
// characters from {0,1}.
inline OvInstance parse_ov(std::istream& in) {
    long long n, m, d;
    if (!(in >> n >> m >> d)) throw ParseError("bad OV header line");
    auto rows = [&](long long count) {
        std::vector<BitVec> out;
        for (long long i = 0; i < count; ++i) {
            std::string row;
            if (!(in >> row) || static_cast<long long>(row.size()) != d)
                throw ParseError("OV row with wrong length");
            std::vector<uint8_t> bits;
            for (char ch : row) {
                if (ch != '0' && ch != '1') throw ParseError("OV rows are over {0,1}");
                bits.push_back(static_cast<uint8_t>(ch - '0'));
            }
            out.push_back(BitVec::from_bits(bits));
        }
        return out;
    };
    OvInstance inst;
    inst.d = d;
    inst.a_vectors = rows(n);
    inst.b_vectors = rows(m);
    inst.check();
    return inst;
}

inline OvInstance load_ov(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_ov(in);
}

inline void save_ov(std::ostream& out, const OvInstance& inst) {
    out << inst.n() << " " << inst.m() << " " << inst.d << "\n";
    auto rows = [&](const std::vector<BitVec>& vs) {
        for (const auto& v : vs) {
            for (uint8_t b : v.bits) out << (b ? '1' : '0');
            out << "\n";
        }
    };
    rows(inst.a_vectors);
    rows(inst.b_vectors);
}

inline void save_ov(const std::string& path, const OvInstance& inst) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    save_ov(out, inst);
}

} // namespace seqhard
