#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_m). Values are rational
// coefficient vectors over the power basis 1, zeta, ..., zeta^{phi(m)-1},
// reduced modulo the m-th cyclotomic polynomial, so equality and
// integrality are decidable.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace uefg {

using Int = mpz_class;
using Rat = mpq_class;

// Orders above the cap fail loudly instead of silently allocating huge
// reduction tables. Default 2048.
void set_order_cap(long cap);
long order_cap();

class CycNum {
public:
    CycNum();  // zero in Q(zeta_1) = Q

    static CycNum from_int(const Int& v);
    static CycNum from_int(long v) { return from_int(Int(v)); }
    static CycNum from_rat(const Rat& v);
    // zeta_m^j (j taken mod m)
    static CycNum root_of_unity(long m, long j);
    // sum_j counts[j] * zeta_m^j, counts.size() == m
    static CycNum from_counts(long m, const std::vector<std::int64_t>& counts);
    static CycNum from_counts(long m, const std::vector<Int>& counts);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rat> as_rational() const;
    std::optional<Int> as_integer() const;

    // value in Q(zeta_M); requires order() | M
    CycNum embedded(long M) const;

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(const Rat& q) const;
    // divide by a nonzero rational
    CycNum divided(const Rat& q) const;
    CycNum pow(unsigned long e) const;

    // equality after embedding both operands into the lcm-order field
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    // non-authoritative numeric view, error ~ phi(m) ulps
    std::complex<double> approx() const;

    // deterministic grouping key: "order|c0,c1,..."
    std::string key() const;
    std::string str() const;

private:
    CycNum(long order, std::vector<Rat> c) : order_(order), c_(std::move(c)) {}

    long order_;
    std::vector<Rat> c_;

    friend class CycloContext;
};

// phi(m) as used by the cyclotomic machinery (degree of Phi_m)
long cyclo_degree(long m);

}  // namespace uefg
