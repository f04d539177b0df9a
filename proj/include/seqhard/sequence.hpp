#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seqhard/rational.hpp"

namespace seqhard {

// Strings over small integer alphabets and 1-D curves share one
// representation; binary strings use symbols {0,1}.
using Seq = std::vector<long long>;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EmptyCurve : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidTraversal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TypeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The four edit-operation costs, exact rationals. Negative entries are
// allowed (e.g. the DNA scoring scheme (2,2,-1,1)).
struct CostScheme {
    Rational del_x;
    Rational del_y;
    Rational match;
    Rational subst;

    static CostScheme lcs() { return {1, 1, 0, 2}; }
    static CostScheme levenshtein() { return {1, 1, 0, 1}; }
    static CostScheme canonical(const Rational& c_subst) { return {1, 1, 0, c_subst}; }

    std::string str() const {
        return del_x.str() + "," + del_y.str() + "," + match.str() + "," + subst.str();
    }

    // Parses "a,b,c,d" with each entry "p" or "p/q".
    static CostScheme parse(std::string_view s) {
        std::vector<Rational> parts;
        size_t pos = 0;
        while (pos <= s.size()) {
            size_t comma = s.find(',', pos);
            if (comma == std::string_view::npos) comma = s.size();
            parts.push_back(Rational::parse(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        if (parts.size() != 4)
            throw ParseError("cost scheme needs exactly 4 comma-separated rationals");
        return {parts[0], parts[1], parts[2], parts[3]};
    }
};

// (length, entry sum); for binary strings the sum is the number of ones.
struct TypeDescriptor {
    long long length = 0;
    long long sum = 0;
    friend bool operator==(const TypeDescriptor&, const TypeDescriptor&) = default;
};

inline TypeDescriptor type_of(const Seq& s) {
    return {static_cast<long long>(s.size()),
            std::accumulate(s.begin(), s.end(), 0LL)};
}

inline bool is_binary(const Seq& s) {
    return std::all_of(s.begin(), s.end(), [](long long v) { return v == 0 || v == 1; });
}

inline Seq repeated(long long symbol, long long count) {
    return Seq(static_cast<size_t>(count), symbol);
}

inline void append(Seq& dst, const Seq& src) {
    dst.insert(dst.end(), src.begin(), src.end());
}

inline Seq reversed(Seq s) {
    std::reverse(s.begin(), s.end());
    return s;
}

inline Seq flipped_bits(Seq s) {
    for (auto& v : s) {
        if (v != 0 && v != 1)
            throw std::invalid_argument("flip requires a binary string");
        v = 1 - v;
    }
    return s;
}

// Binary strings render as digit runs ("0110"); anything else as
// whitespace-separated integers.
inline std::string seq_to_string(const Seq& s) {
    if (is_binary(s)) {
        std::string out;
        out.reserve(s.size());
        for (long long v : s) out.push_back(v ? '1' : '0');
        return out;
    }
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(s[i]);
    }
    return out;
}

inline Seq seq_from_string(std::string_view text) {
    bool digits_only = !text.empty() &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return c >= '0' && c <= '9'; });
    Seq s;
    if (digits_only && text.find_first_not_of("01") == std::string_view::npos) {
        s.reserve(text.size());
        for (char c : text) s.push_back(c - '0');
        return s;
    }
    std::istringstream in{std::string(text)};
    long long v;
    while (in >> v) {
        if (v < 0) throw ParseError("negative entry in sequence");
        s.push_back(v);
    }
    if (!in.eof()) throw ParseError("malformed sequence text");
    return s;
}

inline Seq load_seq(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return seq_from_string(text);
}

inline void save_seq(const std::string& path, const Seq& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << seq_to_string(s) << "\n";
}

} // namespace seqhard
