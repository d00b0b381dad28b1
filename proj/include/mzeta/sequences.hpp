#pragma once

#include "mzeta/rational.hpp"

namespace mzeta {

// Classical sequences, memoized behind internal locks; all functions return
// copies and are safe for concurrent callers.

BigInt factorial(unsigned n);

// C(n, k); 0 when k > n
BigInt binomial(unsigned n, unsigned k);

// Bernoulli numbers under the B_1 = -1/2 convention, generated by the
// defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
Rational bernoulli(unsigned n);

// Euler (secant) numbers: E_0 = 1, E_2 = -1, E_4 = 5, zero at odd index,
// generated by sum_{j even, 0 <= j <= n} C(n, j) E_j = 0 for even n >= 2.
BigInt euler_number(unsigned n);

// Unsigned Stirling numbers of the first kind: coefficient of x^k in the
// rising factorial x (x+1) ... (x+r-1).
BigInt stirling1_unsigned(unsigned r, unsigned k);

} // namespace mzeta
