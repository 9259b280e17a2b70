// Command-line front end: compute individual sums, enumerate cosets and
// labels, run verification sweeps, and emit sweep tables.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <atomic>
#include <complex>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sl3kl/jsonio.hpp"
#include "sl3kl/parallel.hpp"
#include "sl3kl/sl3kl.hpp"

namespace {

using nlohmann::json;
using namespace sl3kl;

struct Output {
    std::string format = "json";
    bool exact = false;
};

int64 need1(const std::vector<int64>& v, const char* flag) {
    if (v.size() != 1) throw std::invalid_argument(std::string(flag) + " expects a single integer");
    return v[0];
}

std::pair<int64, int64> need2(const std::vector<int64>& v, const char* flag) {
    if (v.size() != 2) throw std::invalid_argument(std::string(flag) + " expects two comma-separated integers");
    return {v[0], v[1]};
}

HiddenConditionPolicy parse_policy(const std::string& s) {
    if (s == "warn") return HiddenConditionPolicy::warn;
    if (s == "error") return HiddenConditionPolicy::error;
    if (s == "ignore") return HiddenConditionPolicy::ignore;
    throw std::invalid_argument("--policy must be warn, error, or ignore");
}

Word parse_word(const std::string& s) {
    if (s == "aba") return Word::aba;
    if (s == "bab") return Word::bab;
    throw std::invalid_argument("--word must be aba or bab");
}

void emit_sum(const SumResult& r, const Output& out) {
    if (out.format == "json") {
        std::cout << json(r).dump() << "\n";
        return;
    }
    if (out.format == "human") {
        if (out.exact) {
            json j = r.value;
            std::cout << "L=" << r.value.modulus() << " coeffs=" << j.at("coeffs").dump() << "\n";
        } else if (auto v = r.value.as_integer()) {
            std::cout << v->str() << "\n";
        } else {
            std::complex<double> a = r.approx();
            std::cout << a.real() << (a.imag() < 0 ? " - " : " + ") << std::abs(a.imag()) << "i\n";
        }
        return;
    }
    throw std::invalid_argument("sum supports --format json or human");
}

// Shared accumulator for the verify suites: counts checks, keeps the first
// counterexample by sweep position.
struct VerifyState {
    std::atomic<int64> checked{0};
    std::atomic<int64> failures{0};
    std::mutex mu;
    int64 first_pos = -1;
    json first;

    void pass() { checked.fetch_add(1, std::memory_order_relaxed); }

    void fail(int64 pos, json dump) {
        checked.fetch_add(1, std::memory_order_relaxed);
        failures.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard<std::mutex> lock(mu);
        if (first_pos < 0 || pos < first_pos) {
            first_pos = pos;
            first = std::move(dump);
        }
    }

    int finish(const std::string& suite) {
        json rep{{"suite", suite},
                 {"checked", checked.load()},
                 {"failures", failures.load()},
                 {"first_counterexample", failures.load() ? first : json(nullptr)}};
        std::cout << rep.dump() << "\n";
        return failures.load() ? 1 : 0;
    }
};

std::vector<CharPair> char_box(int64 charmax) {
    std::vector<CharPair> chars;
    for (int64 m1 = -charmax; m1 <= charmax; ++m1)
        for (int64 m2 = -charmax; m2 <= charmax; ++m2)
            for (int64 n1 = -charmax; n1 <= charmax; ++n1)
                for (int64 n2 = -charmax; n2 <= charmax; ++n2)
                    chars.push_back({m1, m2, n1, n2});
    return chars;
}

std::vector<StratumKey> stratum_keys(int64 c1, int64 c2, Word word) {
    std::vector<StratumKey> keys;
    for (int64 f : divisors(gcd64(abs64(c1), abs64(c2))))
        keys.push_back({c1 / f, c2 / f, f, word});
    return keys;
}

int verify_oracle(int64 cmax, int64 charmax, unsigned jobs) {
    VerifyState st;
    std::vector<CharPair> chars = char_box(charmax);
    int64 npairs = cmax * cmax;
    parallel_for(npairs, [&](int64 i) {
        int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
        std::vector<OracleCoset> cosets = oracle_cosets(c1, c2);
        int64 L = lcm64(c1, c2);
        for (size_t k = 0; k < chars.size(); ++k) {
            SumResult lhs = coarse_kloosterman(chars[k], c1, c2);
            SumResult rhs = oracle_character_sum(cosets, chars[k], L);
            if (lhs.value == rhs.value) {
                st.pass();
            } else {
                st.fail(i * static_cast<int64>(chars.size()) + static_cast<int64>(k),
                        json{{"c", {c1, c2}}, {"char", chars[k]}, {"formula", lhs}, {"oracle", rhs}});
            }
        }
    }, jobs);
    return st.finish("oracle");
}

int verify_braid(int64 cmax, int64 charmax, unsigned jobs) {
    VerifyState st;
    std::vector<CharPair> chars = char_box(charmax);
    int64 npairs = cmax * cmax;
    parallel_for(npairs, [&](int64 i) {
        int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
        for (size_t k = 0; k < chars.size(); ++k) {
            SumResult a = coarse_kloosterman(chars[k], c1, c2, Word::aba);
            SumResult b = coarse_kloosterman(chars[k], c1, c2, Word::bab);
            if (a.value == b.value) {
                st.pass();
            } else {
                st.fail(i * static_cast<int64>(chars.size()) + static_cast<int64>(k),
                        json{{"c", {c1, c2}}, {"char", chars[k]}, {"long_word", a}, {"braid_word", b}});
            }
        }
    }, jobs);
    return st.finish("braid");
}

int verify_bounds(int64 cmax, int64 charmax, const std::string& which, unsigned jobs) {
    if (which != "stevens" && which != "refined" && which != "both")
        throw std::invalid_argument("--bound must be stevens, refined, or both");
    VerifyState st;
    std::vector<CharPair> chars = char_box(charmax);
    int64 npairs = cmax * cmax;
    parallel_for(npairs, [&](int64 i) {
        int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
        for (size_t k = 0; k < chars.size(); ++k) {
            double a = std::abs(coarse_kloosterman(chars[k], c1, c2).approx());
            bool ok = true;
            json dump{{"c", {c1, c2}}, {"char", chars[k]}, {"abs", a}};
            if (which != "refined") {
                double b = bound_stevens(chars[k], c1, c2);
                dump["stevens"] = b;
                if (a > b * (1 + 1e-6)) ok = false;
            }
            if (which != "stevens") {
                double b = bound_refined(chars[k], c1, c2);
                dump["refined"] = b;
                if (a > b * (1 + 1e-6)) ok = false;
            }
            if (ok)
                st.pass();
            else
                st.fail(i * static_cast<int64>(chars.size()) + static_cast<int64>(k), std::move(dump));
        }
    }, jobs);
    return st.finish("bounds");
}

int verify_count(int64 cmax, unsigned jobs) {
    VerifyState st;
    int64 npairs = cmax * cmax;
    parallel_for(npairs, [&](int64 i) {
        int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
        int64 formula = coset_count(c1, c2);
        int64 listed = 0;
        for (const StratumKey& key : stratum_keys(c1, c2, Word::aba))
            listed += static_cast<int64>(enumerate_cosets(key).size());
        int64 labels = static_cast<int64>(enumerate_plucker(c1, c2).size());
        if (formula == listed && formula == labels)
            st.pass();
        else
            st.fail(i, json{{"c", {c1, c2}},
                            {"count_formula", formula},
                            {"enumerated", listed},
                            {"labels", labels}});
    }, jobs);
    return st.finish("count");
}

int verify_divisor(const std::vector<double>& s, int64 nmax, int64 D, double tol) {
    VerifyState st;
    for (int64 n = 1; n <= nmax; ++n) {
        DivisorReport rep = s.size() == 2 ? verify_divisor_identity(s[0], s[1], n, D)
                                          : ramanujan_classical_check(s[0], n, D);
        if (rep.abs_err < tol)
            st.pass();
        else
            st.fail(n, json{{"n", n}, {"report", rep}});
    }
    return st.finish("divisor");
}

int verify_hecke(int64 seed, int64 rounds) {
    VerifyState st;
    if (hecke_check(int64{0}, int64{2}, int64{2}) && hecke_check(int64{1}, int64{4}, int64{2}))
        st.pass();
    else
        st.fail(0, json{{"case", "fixed examples"}});
    std::mt19937_64 rng(static_cast<uint64_t>(seed));
    const int64 primes[6] = {2, 3, 5, 7, 11, 13};
    for (int64 r = 0; r < rounds; ++r) {
        int64 p = primes[rng() % 6];
        int64 n = p * (1 + static_cast<int64>(rng() % 40));
        int64 alpha = static_cast<int64>(rng() % 9) - 4;
        bool ok = hecke_check(alpha, n, p) && hecke_check(alpha + 0.5, n, p);
        if (ok)
            st.pass();
        else
            st.fail(r + 1, json{{"alpha", alpha}, {"n", n}, {"p", p}});
    }
    return st.finish("hecke");
}

int verify_plucker_collision() {
    VerifyState st;
    PluckerSextuple first{2, 1, 0, 2, 2, -1};
    PluckerSextuple second{2, 1, 1, 2, 0, -1};
    validate_sextuple(first);
    validate_sextuple(second);
    bool same = coset_equal(realize_matrix(first), realize_matrix(second));
    std::vector<PluckerSextuple> labels = enumerate_plucker(2, 2);
    bool has_first = false, has_second = false;
    for (const PluckerSextuple& s : labels) {
        if (s == first) has_first = true;
        if (s == second) has_second = true;
    }
    int64 naive = plucker_naive_count(2, 2);
    json dump{{"pair", {first, second}},
              {"same_coset", same},
              {"enumerated", {has_first, has_second}},
              {"label_count", labels.size()},
              {"naive_count", naive}};
    if (same && !has_first && has_second && naive > static_cast<int64>(labels.size()))
        st.pass();
    else
        st.fail(0, dump);
    std::cout << dump.dump() << "\n";
    return st.finish("plucker-collision");
}

int verify_level(int64 N, int64 cmax, int64 charmax, unsigned jobs) {
    if (N < 1) throw std::invalid_argument("--N must be positive");
    VerifyState st;
    std::vector<CharPair> chars = char_box(charmax);
    int64 npairs = cmax * cmax;
    parallel_for(npairs, [&](int64 i) {
        int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
        std::vector<OracleCoset> cosets = oracle_cosets(c1, c2);
        int64 L = lcm64(c1, c2);
        std::vector<StratumKey> keys = level_filter(stratum_keys(c1, c2, Word::aba), N);
        for (size_t k = 0; k < chars.size(); ++k) {
            SumResult lhs = oracle_character_sum(cosets, chars[k], L, N);
            CycSum rhs;
            for (const StratumKey& key : keys)
                rhs = add(rhs, fine_kloosterman(chars[k], key).value);
            if (lhs.value == rhs)
                st.pass();
            else
                st.fail(i * static_cast<int64>(chars.size()) + static_cast<int64>(k),
                        json{{"c", {c1, c2}}, {"char", chars[k]}, {"oracle", lhs}, {"assembled", rhs}});
        }
    }, jobs);
    return st.finish("level");
}

void emit_lines(const std::vector<json>& rows) {
    for (const json& r : rows) std::cout << r.dump() << "\n";
}

void emit_table(const std::vector<json>& rows, const std::vector<std::string>& columns,
                const Output& out) {
    if (out.format == "json") {
        emit_lines(rows);
        return;
    }
    if (out.format == "csv") {
        for (size_t i = 0; i < columns.size(); ++i)
            std::cout << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const json& r : rows) {
            for (size_t i = 0; i < columns.size(); ++i)
                std::cout << r.at(columns[i]).dump() << (i + 1 < columns.size() ? "," : "\n");
        }
        return;
    }
    throw std::invalid_argument("table supports --format json or csv");
}

json config_defaults(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream in(argv[i + 1]);
            if (!in) throw std::invalid_argument(std::string("cannot open config file ") + argv[i + 1]);
            json j = json::parse(in);
            if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
            return j;
        }
    }
    return json::object();
}

template <typename T>
T cfg(const json& c, const char* key, T fallback) {
    if (c.contains(key)) return c.at(key).get<T>();
    return fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL(3) Kloosterman sums: exact evaluation, coset enumeration, verification"};
    app.require_subcommand(1);

    json config;
    try {
        config = config_defaults(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    Output out;
    out.format = cfg<std::string>(config, "format", "json");
    unsigned jobs = static_cast<unsigned>(cfg<int64>(config, "jobs", 0));
    int64 seed = cfg<int64>(config, "seed", 12061947);
    std::string config_path;

    app.add_option("--config", config_path,
                   "JSON object with defaults for format/jobs/seed/cmax/charmax/N/cutoff/D/tol/nmax");
    app.add_option("--format", out.format, "Output format: json (default), human (sum), csv (table)");
    app.add_flag("--exact", out.exact, "With --format human, print cyclotomic coefficients");
    app.add_option("--jobs", jobs, "Worker threads for sweeps (default: SL3KL_JOBS or hardware)");
    app.add_option("--seed", seed, "Seed for randomized verification");

    std::vector<int64> m_opt, n_opt, c_opt;
    int64 d1 = 1, d2 = 1, f = 1;
    int64 level = cfg<int64>(config, "N", 1);
    int64 cmax = cfg<int64>(config, "cmax", 12);
    int64 charmax = cfg<int64>(config, "charmax", 2);
    int64 cutoff = cfg<int64>(config, "cutoff", 12);
    int64 nmax = cfg<int64>(config, "nmax", 12);
    int64 D = cfg<int64>(config, "D", 2000);
    int64 rounds = cfg<int64>(config, "rounds", 100);
    double tol = cfg<double>(config, "tol", 1e-3);
    std::string word_s = "aba", policy_s = "warn", bound_s = "both";
    std::vector<double> s_opt;

    CLI::App* sum = app.add_subcommand("sum", "Evaluate a single sum");
    sum->require_subcommand(1);
    CLI::App* sum_classical = sum->add_subcommand("classical", "Classical Kloosterman sum S(m,n;c)");
    CLI::App* sum_fine = sum->add_subcommand("fine", "Stratified long-element sum at (d1,d2,f)");
    CLI::App* sum_fine_braid = sum->add_subcommand("fine-braid", "Braid-word stratified sum at (d1,d2,f)");
    CLI::App* sum_coarse = sum->add_subcommand("coarse", "Full long-element sum at moduli (c1,c2)");
    CLI::App* sum_hyper_ab = sum->add_subcommand("hyper-ab", "Degenerate-cell hyper sum, ab word");
    CLI::App* sum_hyper_ba = sum->add_subcommand("hyper-ba", "Degenerate-cell hyper sum, ba word");
    CLI::App* sum_ramanujan = sum->add_subcommand("ramanujan", "Generalized Ramanujan sum R_{c1,c2}(n1,n2)");
    for (CLI::App* k : {sum_classical, sum_fine, sum_fine_braid, sum_coarse, sum_hyper_ab,
                        sum_hyper_ba, sum_ramanujan}) {
        k->add_option("--m", m_opt, "Left character (one or two components)")->delimiter(',');
        k->add_option("--n", n_opt, "Right character (one or two components)")->delimiter(',');
        k->add_option("--c", c_opt, "Moduli (one or two components)")->delimiter(',');
        k->add_option("--d1", d1, "First stratum modulus");
        k->add_option("--d2", d2, "Second stratum modulus");
        k->add_option("--f", f, "Corner gcd of the stratum");
        k->add_option("--word", word_s, "Reduced word: aba or bab");
        k->add_option("--policy", policy_s, "Hidden divisibility handling: warn, error, ignore");
    }

    CLI::App* enumerate = app.add_subcommand("enumerate", "Stream cosets or labels as JSON lines");
    enumerate->require_subcommand(1);
    CLI::App* en_stratum = enumerate->add_subcommand("stratum", "Cosets of one stratum (d1,d2,f)");
    CLI::App* en_cosets = enumerate->add_subcommand("cosets", "All cosets at moduli (c1,c2)");
    CLI::App* en_plucker = enumerate->add_subcommand("plucker", "Minor-vector labels at (c1,c2)");
    CLI::App* en_kuzidx = enumerate->add_subcommand("kuznetsov-indices",
                                                    "Geometric-side index families at level N");
    for (CLI::App* k : {en_stratum, en_cosets, en_plucker, en_kuzidx}) {
        k->add_option("--c", c_opt, "Moduli c1,c2")->delimiter(',');
        k->add_option("--d1", d1, "First stratum modulus");
        k->add_option("--d2", d2, "Second stratum modulus");
        k->add_option("--f", f, "Corner gcd of the stratum");
        k->add_option("--word", word_s, "Reduced word: aba or bab");
        k->add_option("--level,--N", level, "Keep only strata allowed at level N");
        k->add_option("--m", m_opt, "Left character m1,m2")->delimiter(',');
        k->add_option("--n", n_opt, "Right character n1,n2")->delimiter(',');
        k->add_option("--cutoff", cutoff, "Modulus cutoff for index families");
        k->add_option("--policy", policy_s, "Hidden divisibility handling: warn, error, ignore");
    }

    CLI::App* verify = app.add_subcommand("verify", "Run a verification sweep (exit 1 on failure)");
    verify->require_subcommand(1);
    CLI::App* v_oracle = verify->add_subcommand("oracle", "Formula vs. brute-force enumeration");
    CLI::App* v_braid = verify->add_subcommand("braid", "Long word vs. braid word assembly");
    CLI::App* v_bounds = verify->add_subcommand("bounds", "Magnitude bounds over a sweep");
    CLI::App* v_count = verify->add_subcommand("count", "Coset count formula vs. enumerations");
    CLI::App* v_divisor = verify->add_subcommand("divisor", "Truncated Dirichlet series identity");
    CLI::App* v_hecke = verify->add_subcommand("hecke", "Hecke relation for divisor sums");
    CLI::App* v_collision = verify->add_subcommand("plucker-collision",
                                                   "Distinct label lifts landing in one coset");
    CLI::App* v_level = verify->add_subcommand("level", "Level-restricted sums vs. enumeration");
    for (CLI::App* k : {v_oracle, v_braid, v_bounds, v_count, v_divisor, v_hecke, v_collision, v_level}) {
        k->add_option("--cmax", cmax, "Sweep moduli up to this bound");
        k->add_option("--charmax", charmax, "Sweep characters in [-charmax, charmax]");
        k->add_option("--N", level, "Level for the congruence restriction");
        k->add_option("--s", s_opt, "Exponent(s): s1,s2 for the double series, s for the classical one")
            ->delimiter(',');
        k->add_option("--nmax", nmax, "Check n = 1..nmax");
        k->add_option("--D", D, "Truncation for Dirichlet tails");
        k->add_option("--tol", tol, "Absolute error tolerance");
        k->add_option("--bound", bound_s, "Which bound to enforce: stevens, refined, both");
        k->add_option("--rounds", rounds, "Randomized rounds (hecke)");
    }

    CLI::App* table = app.add_subcommand("table", "Emit a sweep table (JSON lines or CSV)");
    table->require_subcommand(1);
    CLI::App* t_coarse = table->add_subcommand("coarse", "Values over all moduli pairs up to cmax");
    CLI::App* t_bounds = table->add_subcommand("bounds", "Values against both magnitude bounds");
    CLI::App* t_divisor = table->add_subcommand("divisor", "Identity reports for n = 1..nmax");
    for (CLI::App* k : {t_coarse, t_bounds, t_divisor}) {
        k->add_option("--cmax", cmax, "Sweep moduli up to this bound");
        k->add_option("--m", m_opt, "Left character m1,m2")->delimiter(',');
        k->add_option("--n", n_opt, "Right character n1,n2")->delimiter(',');
        k->add_option("--word", word_s, "Reduced word: aba or bab");
        k->add_option("--s", s_opt, "Exponents s1,s2")->delimiter(',');
        k->add_option("--nmax", nmax, "Check n = 1..nmax");
        k->add_option("--D", D, "Truncation for Dirichlet tails");
    }

    for (CLI::App* g : {sum, enumerate, verify, table,
                        sum_classical, sum_fine, sum_fine_braid, sum_coarse, sum_hyper_ab,
                        sum_hyper_ba, sum_ramanujan,
                        en_stratum, en_cosets, en_plucker, en_kuzidx,
                        v_oracle, v_braid, v_bounds, v_count, v_divisor, v_hecke, v_collision,
                        v_level, t_coarse, t_bounds, t_divisor})
        g->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*sum) {
            SumResult r;
            if (*sum_classical) {
                r.value = kloosterman(need1(m_opt, "--m"), need1(n_opt, "--n"), need1(c_opt, "--c"));
                r.formula = "classical kloosterman";
                r.terms = euler_phi(abs64(need1(c_opt, "--c")));
            } else if (*sum_fine) {
                auto [m1, m2] = need2(m_opt, "--m");
                auto [n1, n2] = need2(n_opt, "--n");
                r = fine_kloosterman({m1, m2, n1, n2}, d1, d2, f);
            } else if (*sum_fine_braid) {
                auto [m1, m2] = need2(m_opt, "--m");
                auto [n1, n2] = need2(n_opt, "--n");
                r = fine_kloosterman_braid({m1, m2, n1, n2}, d1, d2, f);
            } else if (*sum_coarse) {
                auto [m1, m2] = need2(m_opt, "--m");
                auto [n1, n2] = need2(n_opt, "--n");
                auto [c1, c2] = need2(c_opt, "--c");
                r = coarse_kloosterman({m1, m2, n1, n2}, c1, c2, parse_word(word_s));
            } else if (*sum_hyper_ab) {
                auto [n1, n2] = need2(n_opt, "--n");
                r = hyper_kloosterman_ab(need1(m_opt, "--m"), n1, n2, d1, d2, parse_policy(policy_s));
            } else if (*sum_hyper_ba) {
                auto [m1, m2] = need2(m_opt, "--m");
                r = hyper_kloosterman_ba(m1, m2, need1(n_opt, "--n"), d1, d2, parse_policy(policy_s));
            } else {
                auto [n1, n2] = need2(n_opt, "--n");
                auto [c1, c2] = need2(c_opt, "--c");
                r = ramanujan_general(c1, c2, n1, n2);
            }
            emit_sum(r, out);
            return 0;
        }

        if (*enumerate) {
            std::vector<json> rows;
            if (*en_stratum) {
                StratumKey key{d1, d2, f, parse_word(word_s)};
                if (level == 1 || level_admits(level, key))
                    for (const CellParams& p : enumerate_cosets(key)) rows.push_back(p);
            } else if (*en_cosets) {
                auto [c1, c2] = need2(c_opt, "--c");
                std::vector<StratumKey> keys = stratum_keys(c1, c2, parse_word(word_s));
                if (level > 1) keys = level_filter(keys, level);
                for (const StratumKey& key : keys)
                    for (const CellParams& p : enumerate_cosets(key)) rows.push_back(p);
            } else if (*en_plucker) {
                auto [c1, c2] = need2(c_opt, "--c");
                for (const PluckerSextuple& s : enumerate_plucker(c1, c2))
                    if (level == 1 || gcd64(s.A1, s.B1) % level == 0) rows.push_back(s);
            } else {
                auto [m1, m2] = need2(m_opt, "--m");
                auto [n1, n2] = need2(n_opt, "--n");
                for (const KuznetsovTerm& t :
                     kuznetsov_geometric_indices(level, {m1, m2, n1, n2}, cutoff, parse_policy(policy_s)))
                    rows.push_back(t);
            }
            emit_lines(rows);
            return 0;
        }

        if (*verify) {
            if (*v_oracle) return verify_oracle(cmax, charmax, jobs);
            if (*v_braid) return verify_braid(cmax, charmax, jobs);
            if (*v_bounds) return verify_bounds(cmax, charmax, bound_s, jobs);
            if (*v_count) return verify_count(cmax, jobs);
            if (*v_divisor) {
                if (s_opt.empty()) s_opt = {2.0, 2.0};
                if (s_opt.size() > 2) throw std::invalid_argument("--s expects one or two exponents");
                return verify_divisor(s_opt, nmax, D, tol);
            }
            if (*v_hecke) return verify_hecke(seed, rounds);
            if (*v_collision) return verify_plucker_collision();
            return verify_level(level, cmax, charmax, jobs);
        }

        // table
        std::vector<json> rows;
        if (*t_divisor) {
            if (s_opt.empty()) s_opt = {2.0, 2.0};
            for (int64 n = 1; n <= nmax; ++n) {
                DivisorReport rep = s_opt.size() == 2 ? verify_divisor_identity(s_opt[0], s_opt[1], n, D)
                                                      : ramanujan_classical_check(s_opt[0], n, D);
                rows.push_back(json{{"n", n},
                                    {"lhs", rep.lhs.real()},
                                    {"rhs", rep.rhs.real()},
                                    {"abs_err", rep.abs_err},
                                    {"tail_bound", rep.tail_bound}});
            }
            emit_table(rows, {"n", "lhs", "rhs", "abs_err", "tail_bound"}, out);
            return 0;
        }
        auto [m1, m2] = need2(m_opt, "--m");
        auto [n1, n2] = need2(n_opt, "--n");
        CharPair ch{m1, m2, n1, n2};
        Word word = parse_word(word_s);
        rows.resize(static_cast<size_t>(cmax * cmax));
        bool want_bounds = t_bounds->parsed();
        parallel_for(cmax * cmax, [&](int64 i) {
            int64 c1 = i / cmax + 1, c2 = i % cmax + 1;
            SumResult r = coarse_kloosterman(ch, c1, c2, word);
            std::complex<double> a = r.approx();
            json row{{"c1", c1}, {"c2", c2}, {"re", a.real()}, {"im", a.imag()}};
            if (want_bounds) {
                row["abs"] = std::abs(a);
                row["stevens"] = bound_stevens(ch, c1, c2);
                row["refined_bound"] = bound_refined(ch, c1, c2);
            }
            rows[static_cast<size_t>(i)] = std::move(row);
        }, jobs);
        if (want_bounds)
            emit_table(rows, {"c1", "c2", "abs", "stevens", "refined_bound"}, out);
        else
            emit_table(rows, {"c1", "c2", "re", "im"}, out);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
