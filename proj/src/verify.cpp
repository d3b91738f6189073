#include "uefg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

namespace uefg {

namespace {

using clock_t_ = std::chrono::steady_clock;

struct Timer {
    clock_t_::time_point t0 = clock_t_::now();
    double elapsed() const {
        return std::chrono::duration<double>(clock_t_::now() - t0).count();
    }
};

std::string tuple_str(std::initializer_list<i64> xs) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (i64 x : xs) {
        if (!first) os << ", ";
        first = false;
        os << x;
    }
    os << ")";
    return os.str();
}

std::string vec_str(const std::vector<i64>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

bool next_vec(std::vector<i64>& v, i64 n) {
    for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i) {
        if (++v[i] < n) return true;
        v[i] = 0;
    }
    return false;
}

// non-decreasing tuples in [0, n)^d; covers all b up to coordinate
// permutation (the checked products are permutation-invariant term by term)
bool next_sorted_vec(std::vector<i64>& v, i64 n) {
    for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i) {
        if (++v[i] < n) {
            for (size_t j = i + 1; j < v.size(); ++j) v[j] = v[i];
            return true;
        }
    }
    return false;
}

i64 norm_mod(const std::vector<i64>& x, i64 n) {
    i64 s = 0;
    for (i64 xi : x) s = (s + xi * xi) % n;
    return s;
}

}  // namespace

VerifyResult verify_gauss(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (i64 n = 1; n <= max_n && r.pass; ++n) {
        for (i64 c = 0; c < std::max<i64>(n, 1); ++c) {
            if (n > 1 && gcd_i64(c, n) != 1) continue;
            ++r.checks;
            if (!(gauss_sum_closed(n, c) == gauss_sum_direct(n, c))) {
                r.pass = false;
                r.failure = "gauss (n, c) = " + tuple_str({n, c});
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_ramanujan(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (i64 n = 1; n <= max_n && r.pass; ++n) {
        for (i64 c = 0; c < n; ++c) {
            ++r.checks;
            Int closed = ramanujan_sum(c, n);
            auto direct = ramanujan_sum_direct(c, n).as_integer();
            if (!direct || *direct != closed) {
                r.pass = false;
                r.failure = "ramanujan (n, c) = " + tuple_str({n, c});
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_char(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (i64 n = 1; n <= max_n && r.pass; n += 2) {
        const CycNum gchi1 = char_gauss_sum(n, 1);
        const bool sqfree = factor(n).squarefree();
        for (i64 c = 0; c < n; ++c) {
            ++r.checks;
            const CycNum gc = char_gauss_sum(n, c);
            // the twist identity needs c a unit, or chi primitive
            // (n squarefree); e.g. G_9(chi, 0) = 6 != 0
            if ((sqfree || gcd_i64(c, n) == 1) &&
                !(gc == gchi1.scaled(Rat(jacobi(c, n))))) {
                r.pass = false;
                r.failure = "eq11 (n, c) = " + tuple_str({n, c});
                break;
            }
            if (sqfree && gcd_i64(c, n) == 1 && !(gauss_sum_direct(n, c) == gc)) {
                r.pass = false;
                r.failure = "eq12 (n, c) = " + tuple_str({n, c});
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_lemma21(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (i64 n = 1; n <= max_n && r.pass; n += 2) {
        for (i64 c = 0; c < n; ++c) {
            ++r.checks;
            if (!lemma21_check(n, c).divisible) {
                r.pass = false;
                r.failure = "lemma21 (n, c) = " + tuple_str({n, c});
                break;
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_lemma31(i64 max_prod) {
    Timer t;
    VerifyResult r;
    for (long d = 1; d <= 2 && r.pass; ++d) {
        // literal double-sum oracle up to this product; the collapse
        // evaluator carries the rest of the range at d = 2
        const i64 literal_bound = (d == 1) ? max_prod : 24;
        for (i64 n1 = 1; n1 <= max_prod && r.pass; ++n1) {
            for (i64 n2 = 1; n1 * n2 <= max_prod && r.pass; ++n2) {
                const i64 n = n1 * n2;
                std::vector<i64> b(d, 0);
                do {
                    ++r.checks;
                    CycNum lhs = (n <= literal_bound)
                                     ? f_pair_direct(n1, n2, d, b)
                                     : f_pair(n1, n2, d, b);
                    CycNum rhs;
                    bool div = true;
                    for (i64 bi : b)
                        if (bi % n1) div = false;
                    if (div) {
                        std::vector<i64> c(b.size());
                        for (size_t i = 0; i < b.size(); ++i) c[i] = b[i] / n1;
                        rhs = f_eval(n2, d, c).scaled(Rat(ipow(n1, d)));
                    }
                    if (!(lhs == rhs)) {
                        r.pass = false;
                        r.failure = "lemma31 (n1, n2, d) = " +
                                    tuple_str({n1, n2, d}) + " b = " + vec_str(b);
                        break;
                    }
                    if (n <= literal_bound &&
                        !(f_pair(n1, n2, d, b) == lhs)) {
                        r.pass = false;
                        r.failure = "lemma31 collapse (n1, n2, d) = " +
                                    tuple_str({n1, n2, d}) + " b = " + vec_str(b);
                        break;
                    }
                } while (next_vec(b, n));
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_lemma32(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (long d = 1; d <= 2 && r.pass; ++d) {
        for (i64 n = 1; n <= max_n && r.pass; ++n) {
            const FactoredInt fn(n);
            const auto subs = subsets(fn);
            std::vector<i64> b(d, 0);
            do {
                ++r.checks;
                CycNum rhs = g_eval(n, d, b);
                for (const auto& s : subs) {
                    CycNum term = f_pair(s.pI, s.nI, d, b);
                    rhs += (s.size % 2) ? term : -term;
                }
                if (!(f_eval(n, d, b) == rhs)) {
                    r.pass = false;
                    r.failure = "lemma32 (n, d) = " + tuple_str({n, d}) +
                                " b = " + vec_str(b);
                    break;
                }
            } while (next_vec(b, n));
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_lemma34(i64 max_n) {
    Timer t;
    VerifyResult r;
    for (long d = 1; d <= 2 && r.pass; ++d) {
        for (i64 n = 1; n <= max_n && r.pass; n += 2) {
            const CycNum g1 = gauss_sum_direct(n, 1);
            const CycNum g1d = g1.pow(d);
            const CycNum eps_d = epsilon(n).value.pow(d);
            std::map<i64, CycNum> chi_cache;
            std::vector<i64> b(d, 0);
            do {
                ++r.checks;
                const CycNum g = g_eval(n, d, b);
                const i64 mc = (n - norm_mod(b, n)) % n;  // -b.b mod n
                CycNum expected;
                if (d % 2) {
                    auto it = chi_cache.find(mc);
                    if (it == chi_cache.end())
                        it = chi_cache.emplace(mc, char_gauss_sum(n, mc)).first;
                    expected = g1d * it->second;
                } else {
                    // eps_n^d n^{d/2} r(-b.b, n)
                    expected =
                        eps_d.scaled(Rat(ipow(n, d / 2)) * Rat(ramanujan_sum(mc, n)));
                }
                if (!(g == expected)) {
                    r.pass = false;
                    r.failure = "lemma34a (n, d) = " + tuple_str({n, d}) +
                                " b = " + vec_str(b);
                    break;
                }
                auto quot = g.divided(Rat(static_cast<long>(n)));
                if (!quot.as_integer()) {
                    r.pass = false;
                    r.failure = "lemma34b (n, d) = " + tuple_str({n, d}) +
                                " b = " + vec_str(b);
                    break;
                }
            } while (next_vec(b, n));
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_lemma37(i64 max_n) {
    Timer t;
    VerifyResult r;
    // part a: the two-case closed form
    for (long d = 1; d <= 3 && r.pass; ++d) {
        const i64 bound = (d == 3) ? std::min<i64>(max_n, 10) : max_n;
        for (i64 n = 2; n <= bound && r.pass; n += 2) {
            if (!factor(n).squarefree()) continue;
            // (G_{4n}(k)/2)^d for units k of Z_n, representatives in [0, n)
            std::map<i64, CycNum> gpow;
            for (i64 k = 0; k < n; ++k)
                if (gcd_i64(k, n) == 1)
                    gpow.emplace(k, gauss_sum_direct(4 * n, k).divided(Rat(2)).pow(d));
            std::vector<i64> b(d, 0);
            do {
                ++r.checks;
                const CycNum g = g_eval(n, d, b);
                bool has_even = false;
                for (i64 bi : b)
                    if (bi % 2 == 0) has_even = true;
                if (has_even) {
                    if (!g.is_zero()) {
                        r.pass = false;
                        r.failure = "lemma37a-even (n, d) = " + tuple_str({n, d}) +
                                    " b = " + vec_str(b);
                        break;
                    }
                } else {
                    const i64 bb = norm_mod(b, 4 * n);
                    CycNum rhs;
                    for (const auto& [k, gp] : gpow) {
                        const i64 inv = mod_inverse(k, 4 * n);
                        rhs += gp * CycNum::root_of_unity(4 * n, -(inv * bb % (4 * n)));
                    }
                    if (!(g == rhs)) {
                        r.pass = false;
                        r.failure = "lemma37a-odd (n, d) = " + tuple_str({n, d}) +
                                    " b = " + vec_str(b);
                        break;
                    }
                }
            } while (next_sorted_vec(b, n));
        }
    }
    // part b: n | g_n(b) for d in {2, 4}
    for (long d = 2; d <= 4 && r.pass; d += 2) {
        for (i64 n = 2; n <= max_n && r.pass; n += 2) {
            if (!factor(n).squarefree()) continue;
            std::vector<i64> b(d, 0);
            do {
                ++r.checks;
                if (!g_eval(n, d, b).divided(Rat(static_cast<long>(n))).as_integer()) {
                    r.pass = false;
                    r.failure = "lemma37b (n, d) = " + tuple_str({n, d}) +
                                " b = " + vec_str(b);
                    break;
                }
            } while (next_sorted_vec(b, n));
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_oracle(long long max_size) {
    Timer t;
    VerifyResult r;
    for (i64 n = 2; n <= 10 && r.pass; ++n) {
        for (long d = 1; d <= 3 && r.pass; ++d) {
            if (ipow(n, d) > Int(static_cast<long>(max_size))) continue;
            GraphParams p(n, d);
            std::vector<i64> b(d, 0);
            do {
                ++r.checks;
                if (!(lambda_closed(p, b).lambda == lambda_oracle(p, b))) {
                    r.pass = false;
                    r.failure = "oracle (n, d) = " + tuple_str({n, d}) +
                                " b = " + vec_str(b);
                    break;
                }
            } while (next_vec(b, n));
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_theorem(long long size_budget) {
    Timer t;
    VerifyResult r;
    auto run = [&](i64 n, long d) {
        if (!r.pass) return;
        if (ipow(n, d) > Int(static_cast<long>(size_budget))) return;
        GraphParams p(n, d);
        auto rep = spectrum(p);
        r.checks += 1;
        if (!rep.all_integral) {
            r.pass = false;
            r.failure = "theorem (n, d) = " + tuple_str({n, d});
        }
    };
    for (i64 n = 3; n <= 45; n += 2)
        for (long d = 1; d <= 3; ++d) run(n, d);
    for (i64 n = 2; n <= 12; n += 2)
        for (long d = 2; d <= 4; d += 2) run(n, d);
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_dense(long long max_size) {
    Timer t;
    VerifyResult r;
    for (i64 n = 2; n <= max_size && r.pass; ++n) {
        for (long d = 1; r.pass; ++d) {
            if (ipow(n, d) > Int(static_cast<long>(max_size))) break;
            GraphParams p(n, d);
            auto dense = adjacency_oracle(p);
            auto rep = spectrum(p);
            std::vector<double> exact;
            for (const auto& g : rep.eigenvalues) {
                const double v = g.integer ? g.integer->get_d()
                                           : g.value.approx().real();
                for (Int m = 0; m < g.multiplicity; ++m) exact.push_back(v);
            }
            std::sort(exact.begin(), exact.end());
            ++r.checks;
            if (dense.size() != exact.size()) {
                r.pass = false;
                r.failure = "dense size (n, d) = " + tuple_str({n, d});
                break;
            }
            for (size_t i = 0; i < dense.size(); ++i) {
                if (std::fabs(dense[i] - exact[i]) > 1e-6) {
                    r.pass = false;
                    r.failure = "dense (n, d) = " + tuple_str({n, d}) +
                                " index " + std::to_string(i);
                    break;
                }
            }
        }
    }
    r.seconds = t.elapsed();
    return r;
}

VerifyResult verify_known() {
    Timer t;
    VerifyResult r;
    auto expect = [&](i64 n, long d,
                      std::vector<std::pair<long, long>> spec_pairs) {
        if (!r.pass) return;
        ++r.checks;
        auto rep = spectrum(GraphParams(n, d));
        bool ok = rep.all_integral &&
                  rep.eigenvalues.size() == spec_pairs.size();
        if (ok) {
            std::sort(spec_pairs.begin(), spec_pairs.end());
            for (size_t i = 0; i < spec_pairs.size(); ++i)
                if (*rep.eigenvalues[i].integer != spec_pairs[i].first ||
                    rep.eigenvalues[i].multiplicity != spec_pairs[i].second)
                    ok = false;
        }
        if (!ok) {
            r.pass = false;
            r.failure = "known spectrum (n, d) = " + tuple_str({n, d});
        }
    };
    expect(3, 2, {{8, 1}, {-1, 8}});
    expect(2, 2, {{2, 1}, {0, 2}, {-2, 1}});
    expect(5, 1, {{4, 1}, {-1, 4}});
    r.seconds = t.elapsed();
    return r;
}

}  // namespace uefg
