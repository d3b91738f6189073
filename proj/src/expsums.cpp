#include "uefg/expsums.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace uefg {

EpsilonClass epsilon(i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::domain_error("epsilon: n must be odd and positive");
    if (n % 4 == 1) return {n, CycNum::from_int(1)};
    return {n, CycNum::root_of_unity(4, 1)};
}

namespace {
std::mutex g_theta_mutex;
std::map<std::tuple<i64, i64, i64>, CycNum>& theta_cache() {
    static std::map<std::tuple<i64, i64, i64>, CycNum> c;
    return c;
}

i64 reduce_mod(i64 x, i64 n) {
    x %= n;
    if (x < 0) x += n;
    return x;
}
}  // namespace

const CycNum& theta(i64 n, i64 b, i64 k) {
    if (n < 1) throw std::domain_error("theta: modulus must be positive");
    b = reduce_mod(b, n);
    k = reduce_mod(k, n);
    std::lock_guard<std::mutex> lk(g_theta_mutex);
    auto& cache = theta_cache();
    auto it = cache.find({n, b, k});
    if (it != cache.end()) return it->second;
    std::vector<std::int64_t> cnt(n, 0);
    for (i64 x = 0; x < n; ++x) ++cnt[(b * x + k * x % n * x) % n];
    auto val = CycNum::from_counts(n, cnt);
    return cache.emplace(std::make_tuple(n, b, k), std::move(val)).first->second;
}

CycNum gauss_sum_direct(i64 n, i64 c) {
    if (n < 1) throw std::domain_error("gauss_sum: modulus must be positive");
    c = reduce_mod(c, n);
    std::vector<std::int64_t> cnt(n, 0);
    for (i64 x = 0; x < n; ++x) ++cnt[c * x % n * x % n];
    return CycNum::from_counts(n, cnt);
}

namespace {
std::mutex g_g1_mutex;
// cached G_n(1), computed once per n by direct summation
const CycNum& gauss_one(i64 n) {
    std::lock_guard<std::mutex> lk(g_g1_mutex);
    static std::map<i64, CycNum> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, gauss_sum_direct(n, 1)).first;
    return it->second;
}
}  // namespace

CycNum sqrt_as_cyc(i64 n) {
    if (n < 1) throw std::domain_error("sqrt_as_cyc: n must be positive");
    if (n % 2 == 1) {
        // eps_n^{-1} G_n(1)
        CycNum g1 = gauss_one(n);
        if (n % 4 == 1) return g1;
        return g1 * CycNum::root_of_unity(4, 3);  // -i
    }
    if (n % 4 == 0) {
        // G_n(1) = (1+i) sqrt(n), so sqrt(n) = G_n(1)(1-i)/2
        CycNum one_minus_i =
            CycNum::from_int(1) - CycNum::root_of_unity(4, 1);
        return (gauss_one(n) * one_minus_i).divided(Rat(2));
    }
    // n = 2 mod 4: sqrt(n) = sqrt(4n)/2, still exact
    return sqrt_as_cyc(4 * n).divided(Rat(2));
}

CycNum gauss_sum_closed(i64 n, i64 c) {
    if (n < 1) throw std::domain_error("gauss_sum: modulus must be positive");
    c = reduce_mod(c, n);
    if (n > 1 && gcd_i64(c, n) != 1)
        throw std::domain_error("gauss_sum_closed: gcd(c, n) != 1");
    if (n == 1) return CycNum::from_int(1);
    if (n % 2 == 1) return gauss_one(n).scaled(Rat(jacobi(c, n)));
    if (n % 4 == 2) return CycNum();
    // n = 0 mod 4, c necessarily odd
    CycNum i_pow_c = CycNum::root_of_unity(4, c);
    CycNum factor = CycNum::from_int(1) + i_pow_c;
    return (factor * sqrt_as_cyc(n)).scaled(Rat(jacobi(n, c)));
}

CycNum gauss_sum(i64 n, i64 c) {
    if (n < 1) throw std::domain_error("gauss_sum: modulus must be positive");
    if (n == 1 || gcd_i64(reduce_mod(c, n), n) == 1)
        return gauss_sum_closed(n, c);
    return gauss_sum_direct(n, c);
}

Int ramanujan_sum(i64 c, i64 n) {
    if (n < 1) throw std::domain_error("ramanujan_sum: modulus must be positive");
    c = reduce_mod(c, n);
    const i64 tc = n / gcd_i64(c == 0 ? n : c, n);
    FactoredInt fn(n), ftc(tc);
    if (ftc.mu() == 0) return Int(0);
    return Int(ftc.mu()) * Int(fn.phi() / ftc.phi());
}

CycNum ramanujan_sum_direct(i64 c, i64 n) {
    if (n < 1) throw std::domain_error("ramanujan_sum: modulus must be positive");
    c = reduce_mod(c, n);
    std::vector<std::int64_t> cnt(n, 0);
    for (i64 k = 0; k < n; ++k)
        if (gcd_i64(k, n) == 1 || n == 1) ++cnt[k * c % n];
    return CycNum::from_counts(n, cnt);
}

CycNum char_gauss_sum(i64 n, i64 c) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("char_gauss_sum: n must be odd and positive");
    c = reduce_mod(c, n);
    std::vector<std::int64_t> cnt(n, 0);
    for (i64 k = 0; k < n; ++k) cnt[c * k % n] += jacobi(k, n);
    return CycNum::from_counts(n, cnt);
}

Lemma21Result lemma21_check(i64 n, i64 c) {
    if (n < 1 || n % 2 == 0)
        throw std::domain_error("lemma21_check: n must be odd and positive");
    CycNum prod = gauss_one(n) * char_gauss_sum(n, c);
    CycNum quot = prod.divided(Rat(static_cast<long>(n)));
    return {quot, quot.as_integer().has_value()};
}

}  // namespace uefg
