#pragma once

// Bounded identity suites: every closed form in the library checked
// against its independent direct-summation oracle over a finite range.
// Used by the CLI `verify` subcommand and the acceptance runner.

#include <string>

#include "uefg/spectra.hpp"

namespace uefg {

struct VerifyResult {
    bool pass = true;
    long long checks = 0;
    std::string failure;  // offending tuple, empty when pass
    double seconds = 0.0;
};

// closed-form Gauss sums vs direct summation, all n <= max_n, gcd(c,n)=1
VerifyResult verify_gauss(i64 max_n = 200);

// Ramanujan closed form vs direct summation, all n <= max_n, c in Z_n
VerifyResult verify_ramanujan(i64 max_n = 500);

// G_n(chi,c) = (c/n) G_n(chi,1) for odd n <= max_n; and
// G_n(c) = G_n(chi,c) for odd squarefree n, gcd(c,n)=1
VerifyResult verify_char(i64 max_n = 99);

// n | G_n(1) G_n(chi,c) for odd n <= max_n, all c
VerifyResult verify_lemma21(i64 max_n = 99);

// f_{n1,n2}(b) = delta(n1|b) n1^d f_{n2}(b/n1) over n1*n2 <= max_prod
VerifyResult verify_lemma31(i64 max_prod = 60);

// f_n(b) = g_n(b) - sum_I (-1)^|I| f_{p_I,n_I}(b), n <= max_n, d <= 2
VerifyResult verify_lemma32(i64 max_n = 30);

// Lemma 3.4: g_n(b) closed forms and n | g_n(b) for odd n <= max_n
VerifyResult verify_lemma34(i64 max_n = 45);

// Lemma 3.7: g_n(b) for squarefree even n <= max_n, plus n | g_n(b)
// for d in {2,4}
VerifyResult verify_lemma37(i64 max_n = 30);

// lambda_closed == lambda_oracle for all b, 2<=n<=10, d<=3, n^d <= max_size
VerifyResult verify_oracle(long long max_size = 10'000);

// integrality theorem at desk scale: odd n <= 45 with d in {1,2,3} and
// even n <= 12 with d in {2,4}, subject to n^d <= budget
VerifyResult verify_theorem(long long size_budget = 100'000);

// dense Jacobi cross-check for every n^d <= max_size, 1e-6 per eigenvalue
VerifyResult verify_dense(long long max_size = 500);

// frozen small spectra: (3,2), (2,2), (5,1)
VerifyResult verify_known();

}  // namespace uefg
