#pragma once

#include "mzeta/pi_value.hpp"
#include "mzeta/rational.hpp"

namespace mzeta {

// Riemann zeta for real s in (0,1) u (1,inf), absolute error <= 1e-13 away
// from the pole. On (0,1) the value comes from the alternating eta series
// with Chebyshev-polynomial acceleration divided by (1 - 2^{1-s}); above 1
// from a truncated direct sum with Euler-Maclaurin tail correction.
// Throws std::domain_error for s <= 0 or s == 1.
double zeta_numeric(double s);

// t(s) = (1 - 2^{-s}) zeta(s), same domain as zeta_numeric.
double t_numeric(double s);

// Accelerated sum_{k>=0} (-1)^k (k+1)^{-s} for s > 0; exposed so the
// eta-identity cross-check can reach the raw alternating sum.
double eta_alternating(double s);

// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!), k >= 1.
PiValue zeta_exact_even(unsigned k);

// zeta(-n) for n >= 0: zeta(0) = -1/2, zeta(-n) = -B_{n+1}/(n+1) for n >= 1
// (zero at negative even integers).
Rational zeta_exact_nonpositive(unsigned n);

} // namespace mzeta
