#pragma once

// Elementary number-theoretic primitives: prime decompositions, the
// integral square root, modular inverses, the Jacobi symbol, and the
// nonempty-subset quantities p_I, n_I, n_I', p_I' attached to a
// factorization.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace uefg {

using i64 = std::int64_t;

i64 gcd_i64(i64 a, i64 b);

struct PrimePower {
    i64 prime;
    int exponent;
};

// A positive integer together with its prime decomposition and the
// cached values of phi and mu.
class FactoredInt {
public:
    explicit FactoredInt(i64 n);

    i64 value() const { return value_; }
    const std::vector<PrimePower>& factors() const { return factors_; }
    i64 phi() const { return phi_; }
    int mu() const { return mu_; }
    int num_primes() const { return static_cast<int>(factors_.size()); }
    bool squarefree() const { return mu_ != 0; }
    i64 radical() const;

private:
    i64 value_;
    std::vector<PrimePower> factors_;
    i64 phi_;
    int mu_;
};

FactoredInt factor(i64 n);

// Largest d such that n | x^2 forces d | x; equals prod p_i^⌈r_i/2⌉.
i64 integral_square_root(const FactoredInt& n);

// I_n(k): the inverse of k in Z_n^*. Throws std::domain_error when
// gcd(k, n) != 1.
i64 mod_inverse(i64 k, i64 n);

// Jacobi symbol (c / n) for odd positive n; jacobi(c, 1) = 1.
int jacobi(i64 c, i64 n);

// Quantities attached to a nonempty subset I of the prime indices of n.
struct SubsetIndex {
    i64 n;                       // value of the parent integer
    unsigned mask;               // bit i set <=> prime index i in I
    i64 pI;                      // prod_{i in I} p_i (squarefree)
    i64 nI;                      // n / pI
    i64 nIroot;                  // integral square root of nI
    i64 pIprime;                 // n / nIroot
    int size;                    // |I|
};

// All 2^t - 1 nonempty subsets, ordered by ascending bitmask.
std::vector<SubsetIndex> subsets(const FactoredInt& n);

}  // namespace uefg
