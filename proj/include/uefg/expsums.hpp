#pragma once

// Gauss sums, Ramanujan sums and quadratic-character Gauss sums over
// Z_n, each with a closed-form evaluator and a direct-summation oracle,
// all values exact cyclotomic numbers.

#include "uefg/cyclo.hpp"
#include "uefg/nt.hpp"

namespace uefg {

// epsilon_n for odd n: 1 if n = 1 mod 4, i if n = 3 mod 4
struct EpsilonClass {
    i64 n;
    CycNum value;
};
EpsilonClass epsilon(i64 n);

// theta(n, b, k) = sum_{x in Z_n} e_n(b x + k x^2); memoized on
// (n, b mod n, k mod n)
const CycNum& theta(i64 n, i64 b, i64 k);

// G_n(c) = sum_{k in Z_n} e_n(c k^2) by direct summation
CycNum gauss_sum_direct(i64 n, i64 c);

// G_n(c) via the closed-form dispatch on n mod 4; requires gcd(c,n)=1
CycNum gauss_sum_closed(i64 n, i64 c);

// closed form when gcd(c,n)=1, direct summation otherwise
CycNum gauss_sum(i64 n, i64 c);

// sqrt(n) as an exact cyclotomic number (odd n: eps_n^{-1} G_n(1);
// n = 0 mod 4: G_n(1)(1-i)/2); used by the closed forms
CycNum sqrt_as_cyc(i64 n);

// r(c, n) = mu(t_c) phi(n)/phi(t_c) with t_c = n/gcd(c,n)
Int ramanujan_sum(i64 c, i64 n);

// r(c, n) = sum_{(k,n)=1} e_n(k c) by direct summation
CycNum ramanujan_sum_direct(i64 c, i64 n);

// G_n(chi, c) = sum_{k in Z_n} (k/n) e_n(c k), n odd
CycNum char_gauss_sum(i64 n, i64 c);

struct Lemma21Result {
    CycNum quotient;   // G_n(1) G_n(chi, c) / n
    bool divisible;    // quotient is a rational integer
};
Lemma21Result lemma21_check(i64 n, i64 c);

}  // namespace uefg
