// uefg: exact spectra of unitary finite-Euclidean graphs T_n^(d).
//
// Subcommands: sum | spectrum | verify | conjecture.
// Exit codes: 0 ok, 2 invalid arguments, 3 closed-form/oracle mismatch
// or identity violation, 4 budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "uefg/report.hpp"
#include "uefg/verify.hpp"

namespace {

using namespace uefg;

constexpr int kExitBadArgs = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitBudget = 4;

struct Range {
    i64 start = 0, stop = 0, step = 1;
};

// start:stop:step, inclusive of stop when aligned; a bare value means a
// single point
Range parse_range(const std::string& s) {
    Range r;
    std::istringstream is(s);
    char sep1 = 0, sep2 = 0;
    if (!(is >> r.start)) throw CLI::ValidationError("range", "bad range: " + s);
    r.stop = r.start;
    if (is >> sep1) {
        if (sep1 != ':' || !(is >> r.stop))
            throw CLI::ValidationError("range", "bad range: " + s);
        if (is >> sep2) {
            if (sep2 != ':' || !(is >> r.step) || r.step <= 0)
                throw CLI::ValidationError("range", "bad range: " + s);
        }
    }
    return r;
}

std::vector<i64> range_values(const Range& r) {
    std::vector<i64> out;
    for (i64 v = r.start; v <= r.stop; v += r.step) out.push_back(v);
    return out;
}

double now_seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

int run_sum(const std::string& kind, i64 n, i64 c, i64 b, i64 k, bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    json results;
    bool agree = true;
    std::string plain;
    if (kind == "gauss") {
        CycNum value = gauss_sum(n, c);
        agree = value == gauss_sum_direct(n, c);
        plain = value.str();
        results = json{{"kind", kind},
                       {"value", cyc_to_json(value)},
                       {"closed_oracle_agree", agree}};
    } else if (kind == "ramanujan") {
        Int value = ramanujan_sum(c, n);
        auto direct = ramanujan_sum_direct(c, n).as_integer();
        agree = direct && *direct == value;
        plain = value.get_str();
        results = json{{"kind", kind},
                       {"value", value.get_str()},
                       {"closed_oracle_agree", agree}};
    } else if (kind == "char-gauss") {
        CycNum value = char_gauss_sum(n, c);
        // twist cross-check, valid for unit c or squarefree n
        if (factor(n).squarefree() || gcd_i64(c % n, n) == 1)
            agree = value == char_gauss_sum(n, 1).scaled(Rat(jacobi(c, n)));
        plain = value.str();
        results = json{{"kind", kind},
                       {"value", cyc_to_json(value)},
                       {"closed_oracle_agree", agree}};
    } else if (kind == "theta") {
        CycNum value = theta(n, b, k);
        plain = value.str();
        results = json{{"kind", kind}, {"value", cyc_to_json(value)}};
    } else {
        throw CLI::ValidationError("kind", "unknown sum kind: " + kind);
    }
    json params{{"n", n}, {"c", c}};
    if (kind == "theta") params = json{{"n", n}, {"b", b}, {"k", k}};
    json env = envelope("sum", params, results, now_seconds(t0));
    if (as_json)
        std::cout << env.dump(2) << "\n";
    else
        std::cout << plain << (agree ? "" : "  [MISMATCH]") << "\n";
    return agree ? 0 : kExitMismatch;
}

int run_spectrum(i64 n, long d, bool with_oracle, bool as_json, bool as_csv) {
    const auto t0 = std::chrono::steady_clock::now();
    GraphParams p(n, d);
    SpectrumReport rep = spectrum(p);
    json results = spectrum_results(rep);
    bool agree = true;
    if (with_oracle) {
        // full-enumeration check per b
        std::vector<i64> b(d, 0);
        do {
            if (!(lambda_closed(p, b).lambda == lambda_oracle(p, b))) {
                agree = false;
                break;
            }
        } while ([&] {
            for (long i = d - 1; i >= 0; --i) {
                if (++b[i] < n) return true;
                b[i] = 0;
            }
            return false;
        }());
        // dense-matrix check when within the dense budget
        bool dense_checked = false, dense_agree = true;
        if (p.vertex_count() <= budget().dense) {
            dense_checked = true;
            auto dense = adjacency_oracle(p);
            std::vector<double> exact;
            for (const auto& g : rep.eigenvalues) {
                const double v =
                    g.integer ? g.integer->get_d() : g.value.approx().real();
                for (Int m = 0; m < g.multiplicity; ++m) exact.push_back(v);
            }
            std::sort(exact.begin(), exact.end());
            for (size_t i = 0; i < dense.size(); ++i)
                if (std::fabs(dense[i] - exact[i]) > 1e-6) dense_agree = false;
        }
        results["oracle_agree"] = agree;
        results["dense_checked"] = dense_checked;
        if (dense_checked) {
            results["dense_agree"] = dense_agree;
            agree = agree && dense_agree;
        }
    }
    json env = envelope("spectrum", json{{"n", n}, {"d", d}}, results,
                        now_seconds(t0));
    if (as_csv && rep.all_integral) {
        std::cout << "value,multiplicity\n";
        for (const auto& g : rep.eigenvalues)
            std::cout << g.integer->get_str() << ","
                      << g.multiplicity.get_str() << "\n";
    } else if (as_json || as_csv) {
        // non-integral spectra cannot be rendered as CSV; fall through to JSON
        std::cout << env.dump(2) << "\n";
    } else {
        std::cout << "T_" << n << "^(" << d << "): degree "
                  << rep.degree.get_str() << ", "
                  << (rep.all_integral ? "integral" : "NON-INTEGRAL")
                  << ", ramanujan_bound "
                  << (rep.ramanujan_ok ? "within" : "exceeded") << "\n";
        for (const auto& g : rep.eigenvalues)
            std::cout << "  " << g.value.str() << "  x"
                      << g.multiplicity.get_str() << "\n";
    }
    return agree ? 0 : kExitMismatch;
}

int run_verify(const std::string& suite, i64 max_n, long long max_size,
               bool as_json) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyResult r;
    if (suite == "gauss")
        r = verify_gauss(max_n > 0 ? max_n : 200);
    else if (suite == "ramanujan")
        r = verify_ramanujan(max_n > 0 ? max_n : 500);
    else if (suite == "char")
        r = verify_char(max_n > 0 ? max_n : 99);
    else if (suite == "lemma21")
        r = verify_lemma21(max_n > 0 ? max_n : 99);
    else if (suite == "lemma31")
        r = verify_lemma31(max_n > 0 ? max_n : 60);
    else if (suite == "lemma32")
        r = verify_lemma32(max_n > 0 ? max_n : 30);
    else if (suite == "lemma34")
        r = verify_lemma34(max_n > 0 ? max_n : 45);
    else if (suite == "lemma37")
        r = verify_lemma37(max_n > 0 ? max_n : 30);
    else if (suite == "oracle")
        r = verify_oracle(max_size > 0 ? max_size : 10'000);
    else
        throw CLI::ValidationError("suite", "unknown suite: " + suite);
    json results{{"suite", suite},
                 {"pass", r.pass},
                 {"checks", r.checks},
                 {"failure", r.failure}};
    json env = envelope("verify",
                        json{{"suite", suite}, {"max_n", max_n},
                             {"max_size", max_size}},
                        results, now_seconds(t0));
    if (as_json)
        std::cout << env.dump(2) << "\n";
    else
        std::cout << suite << ": " << (r.pass ? "pass" : "FAIL") << " ("
                  << r.checks << " checks)"
                  << (r.pass ? "" : " at " + r.failure) << "\n";
    return r.pass ? 0 : kExitMismatch;
}

int run_conjecture(const std::string& n_range, const std::string& d_range,
                   long long sweep_budget, const std::string& out_path) {
    auto ns = range_values(parse_range(n_range));
    auto ds_i = range_values(parse_range(d_range));
    std::vector<long> ds(ds_i.begin(), ds_i.end());
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty() && out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot open output path: " << out_path << "\n";
            return kExitBadArgs;
        }
        out = &file;
    }
    auto records = conjecture_sweep(ns, ds, sweep_budget);
    for (const auto& rec : records)
        *out << conjecture_record_json(rec).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectra of unitary finite-Euclidean graphs"};
    app.require_subcommand(1);

    long long budget_flag = -1;
    app.add_option("--budget", budget_flag,
                   "enumeration budget (max n^d); overrides UEFG_BUDGET");

    // sum
    auto* sum = app.add_subcommand("sum", "evaluate one exponential sum");
    sum->fallthrough();
    std::string sum_kind;
    i64 s_n = 0, s_c = 0, s_b = 0, s_k = 0;
    bool s_json = false;
    sum->add_option("kind", sum_kind, "gauss | ramanujan | char-gauss | theta")
        ->required();
    sum->add_option("--n", s_n, "modulus")->required();
    sum->add_option("--c", s_c, "residue c");
    sum->add_option("--b", s_b, "linear coefficient (theta)");
    sum->add_option("--k", s_k, "quadratic coefficient (theta)");
    sum->add_flag("--json", s_json, "JSON envelope output");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "full spectrum of T_n^(d)");
    spec->fallthrough();
    i64 sp_n = 0;
    long sp_d = 1;
    bool sp_oracle = false, sp_json = false, sp_csv = false;
    spec->add_option("--n", sp_n, "modulus n >= 2")->required();
    spec->add_option("--d", sp_d, "dimension d >= 1")->required();
    spec->add_flag("--oracle", sp_oracle,
                   "also run enumeration and dense-matrix validation");
    spec->add_flag("--json", sp_json, "JSON envelope output");
    spec->add_flag("--csv", sp_csv,
                   "CSV value,multiplicity (integral spectra only)");

    // verify
    auto* ver = app.add_subcommand("verify", "run a bounded identity suite");
    ver->fallthrough();
    std::string v_suite;
    i64 v_max_n = 0;
    long long v_max_size = 0;
    bool v_json = false;
    ver->add_option("--suite", v_suite,
                    "gauss | ramanujan | char | lemma21 | lemma31 | lemma32 | "
                    "lemma34 | lemma37 | oracle")
        ->required();
    ver->add_option("--max-n", v_max_n, "range bound (suite-specific default)");
    ver->add_option("--max-size", v_max_size, "max n^d for the oracle suite");
    ver->add_flag("--json", v_json, "JSON envelope output");

    // conjecture
    auto* conj = app.add_subcommand(
        "conjecture", "sweep (n, d) pairs and record integrality verdicts");
    conj->fallthrough();
    std::string c_n = "2:12:2", c_d = "1:3:2", c_out;
    long long c_budget = -1;
    conj->add_option("--n", c_n, "n range start:stop:step")->required();
    conj->add_option("--d", c_d, "d range start:stop:step")->required();
    conj->add_option("--sweep-budget", c_budget,
                     "per-pair n^d budget (default: enumeration budget)");
    conj->add_option("--out", c_out, "output path for JSON lines ('-' = stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitBadArgs;
    }

    // env override, flag takes precedence
    if (const char* env = std::getenv("UEFG_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) budget().enumeration = v;
    }
    if (budget_flag > 0) budget().enumeration = budget_flag;

    try {
        if (*sum) return run_sum(sum_kind, s_n, s_c, s_b, s_k, s_json);
        if (*spec) return run_spectrum(sp_n, sp_d, sp_oracle, sp_json, sp_csv);
        if (*ver) return run_verify(v_suite, v_max_n, v_max_size, v_json);
        if (*conj)
            return run_conjecture(
                c_n, c_d, c_budget > 0 ? c_budget : budget().enumeration, c_out);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
