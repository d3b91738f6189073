#include "uefg/nt.hpp"

#include <numeric>

namespace uefg {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

FactoredInt::FactoredInt(i64 n) : value_(n), phi_(1), mu_(1) {
    if (n <= 0) throw std::domain_error("factor: n must be positive");
    i64 m = n;
    for (i64 p = 2; p * p <= m; p += (p == 2) ? 1 : 2) {
        if (m % p) continue;
        int r = 0;
        i64 pr = 1;
        while (m % p == 0) {
            m /= p;
            ++r;
            pr *= p;
        }
        factors_.push_back({p, r});
        phi_ *= pr / p * (p - 1);
    }
    if (m > 1) {
        factors_.push_back({m, 1});
        phi_ *= m - 1;
    }
    for (const auto& f : factors_)
        mu_ = (f.exponent >= 2) ? 0 : -mu_;
}

i64 FactoredInt::radical() const {
    i64 r = 1;
    for (const auto& f : factors_) r *= f.prime;
    return r;
}

FactoredInt factor(i64 n) { return FactoredInt(n); }

i64 integral_square_root(const FactoredInt& n) {
    i64 d = 1;
    for (const auto& f : n.factors())
        for (int j = 0; j < (f.exponent + 1) / 2; ++j) d *= f.prime;
    return d;
}

i64 mod_inverse(i64 k, i64 n) {
    if (n < 1) throw std::domain_error("mod_inverse: modulus must be positive");
    k %= n;
    if (k < 0) k += n;
    if (n == 1) return 0;
    // extended Euclid
    i64 r0 = n, r1 = k, s0 = 0, s1 = 1;
    while (r1) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: argument is not a unit");
    s0 %= n;
    if (s0 < 0) s0 += n;
    return s0;
}

int jacobi(i64 c, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::domain_error("jacobi: modulus must be odd and positive");
    c %= n;
    if (c < 0) c += n;
    int sign = 1;
    while (true) {
        if (n == 1) return sign;
        if (c == 0) return 0;
        int twos = 0;
        while (c % 2 == 0) {
            c /= 2;
            ++twos;
        }
        if (twos % 2 && (n % 8 == 3 || n % 8 == 5)) sign = -sign;
        if (c == 1) return sign;
        if (c % 4 == 3 && n % 4 == 3) sign = -sign;
        std::swap(c, n);
        c %= n;
    }
}

std::vector<SubsetIndex> subsets(const FactoredInt& n) {
    const int t = n.num_primes();
    std::vector<SubsetIndex> out;
    if (t == 0) return out;
    out.reserve((1u << t) - 1);
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
        SubsetIndex s;
        s.n = n.value();
        s.mask = mask;
        s.pI = 1;
        s.size = 0;
        for (int i = 0; i < t; ++i)
            if (mask & (1u << i)) {
                s.pI *= n.factors()[i].prime;
                ++s.size;
            }
        s.nI = n.value() / s.pI;
        s.nIroot = integral_square_root(factor(s.nI));
        s.pIprime = n.value() / s.nIroot;
        out.push_back(s);
    }
    return out;
}

}  // namespace uefg
