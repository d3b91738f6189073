#include "uefg/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

#include "uefg/dense_eig.hpp"

namespace uefg {

Budget& budget() {
    static Budget b;
    return b;
}

Int ipow(i64 base, long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(e));
    return r;
}

Int GraphParams::vertex_count() const { return ipow(n.value(), d); }

namespace {

i64 mod_pos(i64 x, i64 n) {
    x %= n;
    if (x < 0) x += n;
    return x;
}

// lexicographic odometer over Z_n^d, most significant component first
bool next_vec(std::vector<i64>& v, i64 n) {
    for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i) {
        if (++v[i] < n) return true;
        v[i] = 0;
    }
    return false;
}

i64 norm_mod(const std::vector<i64>& x, i64 n) {
    i64 s = 0;
    for (i64 xi : x) s = (s + xi % n * (xi % n)) % n;
    return mod_pos(s, n);
}

i64 dot_mod(const std::vector<i64>& a, const std::vector<i64>& b, i64 n) {
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = (s + a[i] % n * (b[i] % n)) % n;
    return mod_pos(s, n);
}

void check_enum_budget(i64 n, long d, long long limit) {
    Int count = ipow(n, d);
    if (count > Int(static_cast<long>(limit)))
        throw BudgetExceeded("enumeration budget exceeded: " + std::to_string(n) +
                                 "^" + std::to_string(d) + " > " +
                                 std::to_string(limit),
                             limit);
}

// x in Z_n^d with n | x.x, cached per (n, d)
const std::vector<std::vector<i64>>& zero_norm_set(i64 n, long d) {
    static std::mutex m;
    static std::map<std::pair<i64, long>, std::vector<std::vector<i64>>> cache;
    std::lock_guard<std::mutex> lk(m);
    auto it = cache.find({n, d});
    if (it != cache.end()) return it->second;
    check_enum_budget(n, d, budget().enumeration);
    std::vector<std::vector<i64>> out;
    std::vector<i64> x(d, 0);
    do {
        if (norm_mod(x, n) == 0) out.push_back(x);
    } while (next_vec(x, n));
    return cache.emplace(std::make_pair(n, d), std::move(out)).first->second;
}

}  // namespace

bool connection_membership(const GraphParams& p, const std::vector<i64>& x) {
    const i64 n = p.n.value();
    return gcd_i64(norm_mod(x, n), n) == 1;
}

Int degree(const GraphParams& p) {
    const i64 n = p.n.value();
    check_enum_budget(n, p.d, budget().enumeration);
    Int count = 0;
    std::vector<i64> x(p.d, 0);
    do {
        if (connection_membership(p, x)) ++count;
    } while (next_vec(x, n));
    return count;
}

CycNum f_eval(i64 n, long d, const std::vector<i64>& b) {
    if (n < 1) throw std::domain_error("f_eval: modulus must be positive");
    if (static_cast<long>(b.size()) != d)
        throw std::invalid_argument("f_eval: dimension mismatch");
    const auto& xs = zero_norm_set(n, d);
    std::vector<std::int64_t> cnt(n, 0);
    for (const auto& x : xs) ++cnt[dot_mod(b, x, n)];
    return CycNum::from_counts(n, cnt).scaled(Rat(static_cast<long>(n)));
}

CycNum f_direct(i64 n, long d, const std::vector<i64>& b) {
    if (n < 1) throw std::domain_error("f_direct: modulus must be positive");
    std::vector<std::int64_t> cnt(n, 0);
    std::vector<i64> x(d, 0);
    do {
        const i64 q = norm_mod(x, n);
        const i64 lin = dot_mod(b, x, n);
        for (i64 k = 0; k < n; ++k) ++cnt[mod_pos(lin + k * q, n)];
    } while (next_vec(x, n));
    return CycNum::from_counts(n, cnt);
}

CycNum f_pair(i64 n1, i64 n2, long d, const std::vector<i64>& b) {
    // inner k-sum over Z_{n2} collapses to n2 * delta(n2 | x.x)
    const i64 n = n1 * n2;
    check_enum_budget(n, d, budget().enumeration);
    std::vector<std::int64_t> cnt(n, 0);
    std::vector<i64> x(d, 0);
    do {
        if (norm_mod(x, n2) == 0) ++cnt[dot_mod(b, x, n)];
    } while (next_vec(x, n));
    return CycNum::from_counts(n, cnt).scaled(Rat(static_cast<long>(n2)));
}

CycNum f_pair_direct(i64 n1, i64 n2, long d, const std::vector<i64>& b) {
    const i64 n = n1 * n2;
    std::vector<std::int64_t> cnt(n, 0);
    std::vector<i64> x(d, 0);
    do {
        const i64 quad = mod_pos(n1 % n * norm_mod(x, n), n);
        const i64 lin = dot_mod(b, x, n);
        for (i64 k = 0; k < n2; ++k) ++cnt[mod_pos(lin + k % n * quad, n)];
    } while (next_vec(x, n));
    return CycNum::from_counts(n, cnt);
}

CycNum g_eval(i64 n, long d, const std::vector<i64>& b) {
    if (n < 1) throw std::domain_error("g_eval: modulus must be positive");
    CycNum sum;
    for (i64 k = 0; k < n; ++k) {
        if (n > 1 && gcd_i64(k, n) != 1) continue;
        CycNum prod = CycNum::from_int(1);
        for (long i = 0; i < d; ++i) prod *= theta(n, b[i], k);
        sum += prod;
    }
    return sum;
}

namespace {

bool divides_vec(i64 m, const std::vector<i64>& b) {
    for (i64 bi : b)
        if (bi % m != 0) return false;
    return true;
}

// shared implementation with an optional cache for f_{p_I} values
EvalTrace lambda_closed_impl(
    const GraphParams& p, const std::vector<i64>& b,
    std::map<std::pair<i64, std::vector<i64>>, CycNum>* fcache) {
    const i64 n = p.n.value();
    const long R = static_cast<long>(p.n.radical());
    EvalTrace tr;
    tr.b = b;
    tr.method = EvalMethod::closed_form;
    CycNum lam;
    if (divides_vec(n, b)) lam = CycNum::from_int(ipow(n, p.d));
    for (const auto& s : subsets(p.n)) {
        if (!divides_vec(s.nI, b)) continue;
        // f_{n_I, p_I}(b) = n_I^d f_{p_I}(c) with b = n_I c; the inner
        // argument is b / n_I, not b itself (they differ by a unit
        // factor only when gcd(n_I, p_I) = 1)
        std::vector<i64> br(b.size());
        for (size_t i = 0; i < b.size(); ++i)
            br[i] = mod_pos(mod_pos(b[i], n) / s.nI, s.pI);
        CycNum fv;
        if (fcache) {
            auto key = std::make_pair(s.pI, br);
            auto it = fcache->find(key);
            if (it == fcache->end())
                it = fcache->emplace(key, f_eval(s.pI, p.d, br)).first;
            fv = it->second;
        } else {
            fv = f_eval(s.pI, p.d, br);
        }
        tr.contributions.emplace_back(s, fv);
        Rat coeff = Rat(ipow(s.nI, p.d)) / Rat(static_cast<long>(s.pI));
        if (s.size % 2) coeff = -coeff;
        lam += fv.scaled(coeff);
    }
    // every operand order divides rad(n), so R is a valid common order
    tr.lambda = lam.embedded(R);
    tr.integrality = tr.lambda.as_integer();
    return tr;
}

}  // namespace

EvalTrace lambda_closed(const GraphParams& p, const std::vector<i64>& b) {
    if (static_cast<long>(b.size()) != p.d)
        throw std::invalid_argument("lambda_closed: dimension mismatch");
    return lambda_closed_impl(p, b, nullptr);
}

CycNum lambda_oracle(const GraphParams& p, const std::vector<i64>& b) {
    if (static_cast<long>(b.size()) != p.d)
        throw std::invalid_argument("lambda_oracle: dimension mismatch");
    const i64 n = p.n.value();
    check_enum_budget(n, p.d, budget().enumeration);
    std::vector<std::int64_t> cnt(n, 0);
    std::vector<i64> x(p.d, 0);
    do {
        if (connection_membership(p, x)) ++cnt[dot_mod(b, x, n)];
    } while (next_vec(x, n));
    return CycNum::from_counts(n, cnt);
}

SpectrumReport spectrum(const GraphParams& p) {
    const auto t0 = std::chrono::steady_clock::now();
    const i64 n = p.n.value();
    const long R = static_cast<long>(p.n.radical());
    check_enum_budget(n, p.d, budget().enumeration);

    SpectrumReport rep;
    rep.n = n;
    rep.d = p.d;
    rep.degree = degree(p);

    std::map<Int, Int> integral;            // value -> multiplicity
    std::map<std::string, std::pair<CycNum, Int>> nonintegral;

    std::map<std::pair<i64, std::vector<i64>>, CycNum> fcache;
    std::vector<i64> b(p.d, 0);
    bool first = true;
    do {
        EvalTrace tr = lambda_closed_impl(p, b, &fcache);
        if (first) {
            first = false;
            if (!tr.integrality || *tr.integrality != rep.degree)
                throw std::logic_error(
                    "spectrum: lambda_0 does not equal the degree");
        }
        if (tr.integrality) {
            ++integral[*tr.integrality];
        } else {
            CycNum v = tr.lambda.embedded(R);
            auto key = v.key();
            auto it = nonintegral.find(key);
            if (it == nonintegral.end())
                nonintegral.emplace(key, std::make_pair(v, Int(1)));
            else
                ++it->second.second;
        }
    } while (next_vec(b, n));

    rep.all_integral = nonintegral.empty();
    for (const auto& [v, mult] : integral)
        rep.eigenvalues.push_back({v, CycNum::from_int(v), mult});
    for (const auto& [k, vm] : nonintegral)
        rep.eigenvalues.push_back({std::nullopt, vm.first, vm.second});

    // Ramanujan bound, reported only: max |lambda| over lambda != degree
    // vs 2 sqrt(degree - 1)
    if (rep.all_integral) {
        Int maxabs = 0;
        for (const auto& g : rep.eigenvalues) {
            if (*g.integer == rep.degree) continue;
            Int a = abs(*g.integer);
            if (a > maxabs) maxabs = a;
        }
        rep.second_max_abs = maxabs.get_d();
        rep.ramanujan_ok = maxabs * maxabs <= 4 * (rep.degree - 1);
    } else {
        double maxabs = 0.0;
        for (const auto& g : rep.eigenvalues) {
            if (g.integer && *g.integer == rep.degree) continue;
            maxabs = std::max(maxabs, std::abs(g.value.approx()));
        }
        rep.second_max_abs = maxabs;
        rep.ramanujan_ok =
            maxabs <= 2.0 * std::sqrt(rep.degree.get_d() - 1.0);
    }

    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::vector<double> adjacency_oracle(const GraphParams& p) {
    const i64 n = p.n.value();
    Int count = p.vertex_count();
    if (count > budget().dense)
        throw BudgetExceeded("dense oracle budget exceeded: " +
                                 count.get_str() + " > " +
                                 std::to_string(budget().dense),
                             budget().dense);
    const long N = static_cast<long>(count.get_si());

    // vertex index <-> vector, lexicographic
    std::vector<std::vector<i64>> verts;
    verts.reserve(N);
    std::vector<i64> x(p.d, 0);
    do {
        verts.push_back(x);
    } while (next_vec(x, n));

    std::vector<double> a(static_cast<size_t>(N) * N, 0.0);
    std::vector<i64> diff(p.d);
    for (long i = 0; i < N; ++i)
        for (long j = i + 1; j < N; ++j) {
            for (long k = 0; k < p.d; ++k) diff[k] = verts[i][k] - verts[j][k];
            if (connection_membership(p, diff)) {
                a[i * N + j] = 1.0;
                a[j * N + i] = 1.0;
            }
        }
    return jacobi_eigenvalues(a, N);
}

std::vector<ConjectureRecord> conjecture_sweep(const std::vector<i64>& ns,
                                               const std::vector<long>& ds,
                                               long long enum_budget) {
    std::vector<ConjectureRecord> out;
    for (i64 n : ns) {
        for (long d : ds) {
            ConjectureRecord rec;
            rec.n = n;
            rec.d = d;
            rec.skipped = false;
            rec.all_integral = true;
            rec.seconds = 0.0;
            const auto t0 = std::chrono::steady_clock::now();
            if (ipow(n, d) > Int(static_cast<long>(enum_budget))) {
                rec.skipped = true;
                out.push_back(rec);
                continue;
            }
            GraphParams p(n, d);
            std::map<std::pair<i64, std::vector<i64>>, CycNum> fcache;
            std::vector<i64> b(d, 0);
            do {
                EvalTrace tr = lambda_closed_impl(p, b, &fcache);
                if (!tr.integrality) {
                    rec.all_integral = false;
                    rec.witness = std::make_pair(
                        b, tr.lambda.embedded(
                               static_cast<long>(p.n.radical())));
                    break;
                }
            } while (next_vec(b, n));
            rec.seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace uefg
