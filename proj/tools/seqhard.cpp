// seqhard: distances, hardness reductions, verification, generation, benchmarks.
//
// Exit codes: 0 success, 1 property failure, 2 input/parse error, 3 budget.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "../vendor/CLI11.hpp"
#include "../vendor/json.hpp"

#include "seqhard/edit_fast.hpp"
#include "seqhard/edit_variants.hpp"
#include "seqhard/gadgets.hpp"
#include "seqhard/measures.hpp"
#include "seqhard/reduction.hpp"
#include "seqhard/traversal.hpp"

using namespace seqhard;
using nlohmann::json;

namespace {

struct PropertyFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

CostScheme parse_costs(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ',') { parts.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    parts.push_back(cur);
    if (parts.size() != 4)
        throw ParseError("--costs expects del_x,del_y,match,subst");
    return CostScheme{Rational::parse(parts[0]), Rational::parse(parts[1]),
                      Rational::parse(parts[2]), Rational::parse(parts[3])};
}

void emit(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << " = ";
        if (it->is_string()) std::cout << it->get<std::string>();
        else std::cout << *it;
        std::cout << "\n";
    }
}

std::unique_ptr<MeasureAdapter> make_adapter(const std::string& measure,
                                             const Rational& csubst) {
    if (measure == "lcs") return std::make_unique<LcsAdapter>();
    if (measure == "edit") return std::make_unique<EditAdapter>(csubst);
    if (measure == "dtw") return std::make_unique<DtwAdapter>();
    throw ParseError("no gadget family for measure '" + measure + "'");
}

// ---------------------------------------------------------------- dist

int cmd_dist(const std::string& measure, const std::string& algorithm,
             const std::string& costs_text, const std::string& x_path,
             const std::string& y_path, bool as_json) {
    Seq x = load_seq(x_path);
    json out;
    out["measure"] = measure;
    out["algorithm"] = algorithm;
    out["x_len"] = x.size();

    if (measure == "lps" || measure == "lts") {
        long long v = measure == "lps" ? lps_length(x) : lts_length(x);
        out["value"] = v;
        emit(out, as_json);
        return 0;
    }

    Seq y = load_seq(y_path.empty() ? x_path : y_path);
    out["y_len"] = y.size();
    Rational value;
    if (measure == "edit") {
        CostScheme cs = parse_costs(costs_text);
        if (algorithm == "fast") value = edit_fast_rational(x, y, cs);
        else if (algorithm == "brute") value = brute_force_min_edit(x, y, cs);
        else value = edit_dp(x, y, cs);
    } else if (measure == "lcs") {
        out["lcs"] = lcs_length(x, y);
        value = Rational(delta_lcs(x, y));
    } else if (measure == "dtw") {
        if (algorithm == "brute") value = brute_force_min_dtw(x, y);
        else value = Rational(dtw_dp(x, y));
    } else {
        throw ParseError("unknown measure '" + measure + "'");
    }
    out["value"] = value.str();
    emit(out, as_json);
    return 0;
}

// ---------------------------------------------------------------- reduce

int cmd_reduce(const std::string& from, const std::string& to,
               const std::string& input, const std::string& x_path,
               const std::string& y_path, const std::string& output,
               const std::string& transcript_path, const std::string& csubst,
               const std::string& left_fraction, bool as_json) {
    json out;
    out["from"] = from;
    out["to"] = to;
    if (from == "ov") {
        OvInstance inst = load_ov(input);
        auto adapter = make_adapter(to, Rational::parse(csubst));
        ReductionOutput r = ov_to_instance(inst, *adapter);
        save_seq(x_path, r.x);
        save_seq(y_path, r.y);
        std::ofstream t(transcript_path);
        if (!t) throw ParseError("cannot open " + transcript_path + " for writing");
        t << r.transcript.str();
        out["x_len"] = r.x.size();
        out["y_len"] = r.y.size();
        out["rho"] = r.transcript.threshold_rho.str();
    } else if (from == "sat" && to == "ov") {
        CnfFormula f = load_dimacs(input);
        OvInstance inst = cnf_to_ov(f, Rational::parse(left_fraction));
        std::ofstream o(output);
        if (!o) throw ParseError("cannot open " + output + " for writing");
        save_ov(o, inst);
        out["n"] = inst.n();
        out["m"] = inst.m();
        out["d"] = inst.d;
    } else if (from == "lcs" && (to == "lps" || to == "lts")) {
        Seq x = load_seq(x_path), y = load_seq(y_path);
        LcsReduction r = to == "lps" ? lps_from_lcs(x, y) : lts_from_lcs(x, y);
        save_seq(output, r.z);
        out["kappa"] = r.kappa;
        out["z_len"] = r.z.size();
    } else {
        throw ParseError("unsupported reduction " + from + " -> " + to);
    }
    emit(out, as_json);
    return 0;
}

// ---------------------------------------------------------------- verify

Seq typed_random(std::mt19937_64& rng, int len, int sum) {
    Seq q(static_cast<size_t>(len), 0);
    for (int i = 0; i < sum; ++i) q[static_cast<size_t>(i)] = 1;
    std::shuffle(q.begin(), q.end(), rng);
    return q;
}

int verify_sandwich_suite(const std::string& measure, const Rational& csubst,
                          int trials, uint64_t seed, json& out) {
    auto adapter = make_adapter(measure, csubst);
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % n);
        int l = 2 + static_cast<int>(rng() % 3);
        int sx = static_cast<int>(rng() % (l + 1));
        int sy = static_cast<int>(rng() % (l + 1));
        std::vector<Seq> xs, ys;
        for (int i = 0; i < n; ++i) xs.push_back(typed_random(rng, l, sx));
        for (int j = 0; j < m; ++j) ys.push_back(typed_random(rng, l, sy));
        if (!verify_sandwich(*adapter, xs, ys).holds) ++failures;
    }
    out["trials"] = trials;
    out["failures"] = failures;
    return failures;
}

int verify_oracle_suite(const std::string& measure, const CostScheme& costs,
                        int max_len, json& out) {
    int failures = 0, checked = 0;
    long long sigma = measure == "dtw" ? 3 : 2;
    std::vector<Seq> all = {{}};
    std::vector<std::vector<Seq>> by_len = {{Seq{}}};
    for (int l = 1; l <= max_len; ++l) {
        std::vector<Seq> cur;
        for (const Seq& p : by_len.back()) {
            for (long long s = 0; s < sigma; ++s) {
                Seq q = p;
                q.push_back(s);
                cur.push_back(q);
            }
        }
        for (const Seq& q : cur) all.push_back(q);
        by_len.push_back(cur);
    }
    for (const Seq& x : all) {
        for (const Seq& y : all) {
            if (x.size() + y.size() > 10) continue;
            ++checked;
            if (measure == "edit") {
                if (edit_dp(x, y, costs) != brute_force_min_edit(x, y, costs))
                    ++failures;
            } else if (measure == "dtw") {
                if (x.empty() || y.empty()) { --checked; continue; }
                if (dtw_dp(x, y) != brute_force_min_dtw(x, y)) ++failures;
            } else {
                throw ParseError("oracle suite supports edit and dtw only");
            }
        }
    }
    out["checked"] = checked;
    out["failures"] = failures;
    return failures;
}

int verify_endtoend_suite(const std::string& measure, long long n, long long d,
                          int trials, uint64_t seed, json& out) {
    auto adapter = make_adapter(measure, Rational(1));
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        OvInstance inst = t % 2 == 0 ? gen_planted(n, n, d, seed + static_cast<uint64_t>(t))
                                     : gen_random(n, n, d, Rational(1, 2),
                                                  seed + static_cast<uint64_t>(t));
        if (decide_ov_via_measure(inst, *adapter) != ov_brute_force(inst))
            ++failures;
    }
    out["trials"] = trials;
    out["failures"] = failures;
    return failures;
}

// ---------------------------------------------------------------- gen

int cmd_gen(long long n, long long m, long long d, const std::string& density,
            bool planted, uint64_t seed, const std::string& output, bool as_json) {
    OvInstance inst = planted ? gen_planted(n, m, d, seed)
                              : gen_random(n, m, d, Rational::parse(density), seed);
    std::ofstream o(output);
    if (!o) throw ParseError("cannot open " + output + " for writing");
    save_ov(o, inst);
    json out;
    out["n"] = n;
    out["m"] = m;
    out["d"] = d;
    out["planted"] = planted;
    out["output"] = output;
    emit(out, as_json);
    return 0;
}

// ---------------------------------------------------------------- bench

Seq bench_seq(std::mt19937_64& rng, size_t len) {
    Seq s;
    s.reserve(len);
    for (size_t i = 0; i < len; ++i) s.push_back(static_cast<long long>(rng() % 4));
    return s;
}

int cmd_bench(long long m, const std::string& sizes_text, uint64_t seed,
              bool as_json) {
    std::vector<long long> sizes;
    std::string cur;
    for (char c : sizes_text + ",") {
        if (c == ',') {
            if (!cur.empty()) sizes.push_back(std::stoll(cur));
            cur.clear();
        } else cur.push_back(c);
    }
    std::mt19937_64 rng(seed);
    CostScheme cs = CostScheme::lcs();
    IntegerCostScheme ic = to_positive_integer_costs(cs);
    json rows = json::array();
    for (long long n : sizes) {
        Seq x = bench_seq(rng, static_cast<size_t>(n));
        Seq y = bench_seq(rng, static_cast<size_t>(m));
        auto t0 = std::chrono::steady_clock::now();
        long long fast = edit_fast(x, y, ic);
        auto t1 = std::chrono::steady_clock::now();
        ScaledCosts sc{ic.del_x, ic.del_y, ic.match, ic.subst, 1};
        long long dp = edit_dp_scaled(x, y, sc);
        auto t2 = std::chrono::steady_clock::now();
        json row;
        row["n"] = n;
        row["m"] = m;
        row["cells"] = n * m;
        row["fast_ms"] =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        row["dp_ms"] = std::chrono::duration<double, std::milli>(t2 - t1).count();
        row["agree"] = (fast == dp);
        rows.push_back(row);
    }
    if (as_json) {
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& row : rows)
            std::cout << "n=" << row["n"] << " m=" << row["m"]
                      << " cells=" << row["cells"] << " fast_ms=" << row["fast_ms"]
                      << " dp_ms=" << row["dp_ms"] << " agree=" << row["agree"]
                      << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequence-similarity distances and hardness reductions"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    // dist
    auto* dist = app.add_subcommand("dist", "compute a distance between inputs");
    std::string measure = "edit", algorithm = "dp", costs = "1,1,0,1";
    std::string x_path, y_path;
    dist->add_option("--measure", measure, "edit|lcs|dtw|lps|lts");
    dist->add_option("--algorithm", algorithm, "dp|fast|brute");
    dist->add_option("--costs", costs, "del_x,del_y,match,subst (rationals p/q)");
    dist->add_option("--x", x_path, "first input file")->required();
    dist->add_option("--y", y_path, "second input file");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "compile one problem into another");
    std::string from = "ov", to = "dtw", input, output, transcript_path;
    std::string csubst = "1", left_fraction = "1/2";
    std::string out_x, out_y;
    reduce->add_option("--from", from, "ov|sat|lcs");
    reduce->add_option("--to", to, "dtw|lcs|edit|ov|lps|lts");
    reduce->add_option("--input", input, "source instance file");
    reduce->add_option("--x", out_x, "x-side file (output for ov, input for lcs)");
    reduce->add_option("--y", out_y, "y-side file (output for ov, input for lcs)");
    reduce->add_option("--output", output, "single-file output");
    reduce->add_option("--transcript", transcript_path, "transcript output file");
    reduce->add_option("--csubst", csubst, "substitution cost for edit gadgets");
    reduce->add_option("--left-fraction", left_fraction,
                       "variable split for sat->ov");

    // verify
    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite = "sandwich";
    int trials = 50, exhaustive_len = 4;
    long long vn = 2, vd = 2;
    uint64_t seed = 1;
    verify->add_option("suite", suite, "sandwich|oracle|endtoend")->required();
    verify->add_option("--measure", measure, "edit|lcs|dtw");
    verify->add_option("--csubst", csubst, "substitution cost for edit");
    verify->add_option("--costs", costs, "cost scheme for the oracle suite");
    verify->add_option("--trials", trials, "randomized trial count");
    verify->add_option("--exhaustive-len", exhaustive_len, "max input length");
    verify->add_option("--n", vn, "vectors per side for endtoend");
    verify->add_option("--d", vd, "dimension for endtoend");
    verify->add_option("--seed", seed, "RNG seed");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an orthogonal-vectors instance");
    long long gn = 4, gm = 4, gd = 6;
    std::string density = "1/2";
    bool planted = false;
    gen->add_option("--n", gn, "a-side vector count");
    gen->add_option("--m", gm, "b-side vector count");
    gen->add_option("--d", gd, "dimension");
    gen->add_option("--density", density, "one-density as a rational");
    gen->add_flag("--planted", planted, "plant an orthogonal pair");
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--output", output, "output file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "time dp vs fast edit distance");
    long long bm = 100;
    std::string sizes = "10000,20000";
    bench->add_option("--m", bm, "second-string length");
    bench->add_option("--sizes", sizes, "comma-separated first-string lengths");
    bench->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
        if (dist->parsed())
            return cmd_dist(measure, algorithm, costs, x_path, y_path, as_json);
        if (reduce->parsed())
            return cmd_reduce(from, to, input, out_x, out_y, output,
                              transcript_path, csubst, left_fraction, as_json);
        if (verify->parsed()) {
            json out;
            out["suite"] = suite;
            out["measure"] = measure;
            int failures = 0;
            if (suite == "sandwich")
                failures = verify_sandwich_suite(measure, Rational::parse(csubst),
                                                 trials, seed, out);
            else if (suite == "oracle")
                failures = verify_oracle_suite(measure, parse_costs(costs),
                                               exhaustive_len, out);
            else if (suite == "endtoend")
                failures = verify_endtoend_suite(measure, vn, vd, trials, seed, out);
            else
                throw ParseError("unknown verify suite '" + suite + "'");
            out["pass"] = (failures == 0);
            emit(out, as_json);
            return failures == 0 ? 0 : 1;
        }
        if (gen->parsed())
            return cmd_gen(gn, gm, gd, density, planted, seed, output, as_json);
        if (bench->parsed()) return cmd_bench(bm, sizes, seed, as_json);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
