#pragma once

// The graph layer: connection set S_d(n) of T_n^(d), eigenvalues
// lambda_b via the inclusion-exclusion closed-form pipeline and via
// brute-force oracles, full-spectrum assembly with exact integrality
// verdicts, and the conjecture sweep over (n even, d odd).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uefg/cyclo.hpp"
#include "uefg/expsums.hpp"
#include "uefg/nt.hpp"

namespace uefg {

struct Budget {
    long long enumeration = 1'000'000;  // max n^d for lambda/spectrum work
    long dense = 600;                   // max n^d for the dense adjacency oracle
};
Budget& budget();

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, long long limit)
        : std::runtime_error(what), limit(limit) {}
    long long limit;
};

enum class ParityClass { odd_n, even_n_even_d, even_n_odd_d };

struct GraphParams {
    FactoredInt n;
    long d;

    GraphParams(i64 n_, long d_) : n(n_), d(d_) {
        if (n_ < 2) throw std::domain_error("GraphParams: n must be >= 2");
        if (d_ < 1) throw std::domain_error("GraphParams: d must be >= 1");
    }
    Int vertex_count() const;
    ParityClass parity() const {
        if (n.value() % 2) return ParityClass::odd_n;
        return d % 2 ? ParityClass::even_n_odd_d : ParityClass::even_n_even_d;
    }
};

Int ipow(i64 base, long e);

// x in S_d(n), i.e. gcd(sum x_i^2, n) = 1
bool connection_membership(const GraphParams& p, const std::vector<i64>& x);

// |S_d(n)| by counting
Int degree(const GraphParams& p);

// f_n(b) = sum_{k in Z_n, x in Z_n^d} e_n(b.x + k x.x)
//        = n * sum_{x : n | x.x} e_n(b.x)
CycNum f_eval(i64 n, long d, const std::vector<i64>& b);

// literal (k, x) double enumeration, the test oracle for f_eval
CycNum f_direct(i64 n, long d, const std::vector<i64>& b);

// f_{n1,n2}(b) = sum_{k in Z_{n2}, x in Z_{n1 n2}^d} e_{n1 n2}(b.x + n1 k x.x)
CycNum f_pair(i64 n1, i64 n2, long d, const std::vector<i64>& b);
CycNum f_pair_direct(i64 n1, i64 n2, long d, const std::vector<i64>& b);

// g_n(b) = sum_{(k,n)=1} prod_i theta(n, b_i, k)
CycNum g_eval(i64 n, long d, const std::vector<i64>& b);

enum class EvalMethod { closed_form, theta_direct, full_enumeration };

struct EvalTrace {
    std::vector<i64> b;
    CycNum lambda;
    EvalMethod method;
    // (subset, f_{p_I}(b / n_I)) for each nonempty subset with n_I | b;
    // subsets failing the divisibility contribute zero and are omitted
    std::vector<std::pair<SubsetIndex, CycNum>> contributions;
    std::optional<Int> integrality;
};

// lambda_b via the inclusion-exclusion decomposition
// delta(n|b) n^d + sum_I (-1)^|I| / p_I * delta(n_I|b) n_I^d f_{p_I}(b)
EvalTrace lambda_closed(const GraphParams& p, const std::vector<i64>& b);

// lambda_b = sum_{x in S_d(n)} e_n(b.x) by full enumeration
CycNum lambda_oracle(const GraphParams& p, const std::vector<i64>& b);

struct EigenvalueGroup {
    std::optional<Int> integer;  // set when the value is a rational integer
    CycNum value;                // always set, at a common order for the run
    Int multiplicity;
};

struct SpectrumReport {
    i64 n;
    long d;
    Int degree;
    std::vector<EigenvalueGroup> eigenvalues;
    bool all_integral;
    bool ramanujan_ok;
    double second_max_abs;  // max |lambda| over lambda != degree
    double seconds;
};

SpectrumReport spectrum(const GraphParams& p);

// eigenvalues of the explicit 0/1 adjacency matrix via the in-repo
// cyclic-Jacobi solver; sorted ascending
std::vector<double> adjacency_oracle(const GraphParams& p);

struct ConjectureRecord {
    i64 n;
    long d;
    bool skipped;       // over budget
    bool all_integral;  // meaningful when !skipped
    std::optional<std::pair<std::vector<i64>, CycNum>> witness;
    double seconds;
};

std::vector<ConjectureRecord> conjecture_sweep(const std::vector<i64>& ns,
                                               const std::vector<long>& ds,
                                               long long enum_budget);

}  // namespace uefg
