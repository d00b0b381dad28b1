#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace mzeta {

// Pole of zeta_r(s) at s = 1/k: order l = floor(r/k), remainder m = r - k l.
struct PoleSpec {
    unsigned r = 0;
    unsigned k = 0;
    unsigned order = 0;
    unsigned remainder = 0;
};

// All poles of zeta_r on the positive real axis: s = 1/k for 1 <= k <= r.
std::vector<PoleSpec> pole_set(unsigned r);

// Leading Laurent coefficient R(k; zeta_r) of (ks - 1)^{-l} at s = 1/k:
// (-1)^{(k+1) l} / (k^l l!) * zeta_m(1/k), with zeta_0 = 1.
double leading_coefficient(unsigned r, unsigned k);

// Relative-gap budget for the numeric limit at the final epsilon (1e-4
// ladder). Cancellation near a pole of order l costs roughly eps^{-l} ulp,
// far below this budget for l <= 6; a single figure covers every order.
double laurent_order_tolerance(unsigned order);

inline constexpr double kLaurentEpsilons[3] = {1e-2, 1e-3, 1e-4};

struct LaurentReport {
    PoleSpec pole;
    double leading_closed_form = 0.0;
    std::vector<std::pair<double, double>> estimates; // (eps, zeta_r(1/k+eps) (k eps)^l)
    double final_rel_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Evaluates zeta_r(1/k + eps) (k eps)^l along the epsilon ladder and checks
// the estimates contract toward the closed-form coefficient. Throws
// std::domain_error if some 1/k + eps collides with another pole 1/k'.
LaurentReport laurent_numeric_check(unsigned r, unsigned k, const std::vector<double>& epsilons);

struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Certifies sign(zeta_m(1/k)) == (-1)^m with m = r mod k, which pins the
// pole order at exactly floor(r/k). Throws inconclusive_error when the value
// is too close to zero for the double-precision error budget.
bool nonvanishing_certificate(unsigned r, unsigned k);

} // namespace mzeta
