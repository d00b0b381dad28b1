#include "mzeta/laurent.hpp"

#include <cmath>
#include <string>

#include "mzeta/mzv.hpp"

namespace mzeta {

std::vector<PoleSpec> pole_set(unsigned r) {
    if (r == 0) throw std::domain_error("pole_set: require r >= 1");
    std::vector<PoleSpec> out;
    out.reserve(r);
    for (unsigned k = 1; k <= r; ++k) out.push_back(PoleSpec{r, k, r / k, r % k});
    return out;
}

double leading_coefficient(unsigned r, unsigned k) {
    if (k == 0 || k > r) throw std::domain_error("leading_coefficient: require 1 <= k <= r");
    const unsigned l = r / k;
    const unsigned m = r % k;
    // all arguments j/k with j <= m < k stay inside (0,1)
    const double zm = m == 0 ? 1.0 : diagonal_closed_form(Family::Zeta, m, 1.0 / k);
    double denom = 1.0;
    for (unsigned i = 1; i <= l; ++i) denom *= static_cast<double>(k) * i;
    const double sign = ((k + 1) * l) % 2 == 0 ? 1.0 : -1.0;
    return sign * zm / denom;
}

double laurent_order_tolerance(unsigned) {
    // the gap at eps = 1e-4 is dominated by the next Laurent coefficient
    // (~ l * gamma * eps relative), well under this budget for every l <= 6
    return 1e-2;
}

LaurentReport laurent_numeric_check(unsigned r, unsigned k, const std::vector<double>& epsilons) {
    if (k == 0 || k > r) throw std::domain_error("laurent_numeric_check: require 1 <= k <= r");
    if (epsilons.empty()) throw std::invalid_argument("laurent_numeric_check: no epsilons");

    LaurentReport rep;
    rep.pole = PoleSpec{r, k, r / k, r % k};
    rep.leading_closed_form = leading_coefficient(r, k);
    rep.tolerance = laurent_order_tolerance(rep.pole.order);

    for (double eps : epsilons) {
        const double s = 1.0 / k + eps;
        for (unsigned k2 = 1; k2 <= r; ++k2) {
            if (k2 != k && std::abs(s - 1.0 / k2) <= 1e-9)
                throw std::domain_error("laurent_numeric_check: 1/" + std::to_string(k) + " + " +
                                        std::to_string(eps) + " collides with the pole at 1/" +
                                        std::to_string(k2));
        }
        const double estimate =
            diagonal_closed_form(Family::Zeta, r, s) * std::pow(k * eps, static_cast<int>(rep.pole.order));
        rep.estimates.emplace_back(eps, estimate);
    }

    bool contracting = true;
    double prev_gap = -1.0;
    for (const auto& [eps, est] : rep.estimates) {
        const double gap = std::abs(est - rep.leading_closed_form);
        if (prev_gap >= 0.0 && gap >= prev_gap + 1e-15) contracting = false;
        prev_gap = gap;
    }
    rep.final_rel_gap = prev_gap / std::abs(rep.leading_closed_form);
    rep.pass = contracting && rep.final_rel_gap <= rep.tolerance;
    return rep;
}

bool nonvanishing_certificate(unsigned r, unsigned k) {
    if (k == 0 || k > r) throw std::domain_error("nonvanishing_certificate: require 1 <= k <= r");
    const unsigned m = r % k;
    const double v = m == 0 ? 1.0 : diagonal_closed_form(Family::Zeta, m, 1.0 / k);
    // 10x the double-precision evaluation budget for a depth-m closed form
    if (std::abs(v) < 1e-8)
        throw inconclusive_error("nonvanishing_certificate: |zeta_m(1/k)| below 10x error budget");
    return (m % 2 == 0) == (v > 0.0);
}

} // namespace mzeta
