#include "mzeta/zeta.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "mzeta/sequences.hpp"

namespace mzeta {

namespace {

// Cohen-Rodriguez Villegas-Zagier acceleration for alternating series with
// totally monotone terms. n = 24 already puts the scheme error near
// (3+sqrt(8))^{-24} ~ 4e-19; a few spare terms cover the (0,1) endpoints.
constexpr int kChebyshevTerms = 28;

// Direct sum cutoff and number of Euler-Maclaurin correction terms.
constexpr int kEmCutoff = 20;
constexpr int kEmOrder = 12;

double em_zeta(double s) {
    double sum = 0.0;
    for (int n = 1; n < kEmCutoff; ++n) sum += std::pow(n, -s);
    const double ns = std::pow(kEmCutoff, -s); // N^{-s}
    sum += 0.5 * ns;
    sum += kEmCutoff * ns / (s - 1.0); // N^{1-s} / (s-1)

    static const auto b_over_fact = [] {
        std::array<double, kEmOrder> v{};
        for (int j = 1; j <= kEmOrder; ++j)
            v[j - 1] = (bernoulli(2 * j) / Rational(factorial(2 * j))).to_double();
        return v;
    }();

    // B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{1-s-2j}
    double rising = s;
    double npow = ns / kEmCutoff;
    for (int j = 1; j <= kEmOrder; ++j) {
        const double term = b_over_fact[j - 1] * rising * npow;
        sum += term;
        if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        npow /= double(kEmCutoff) * double(kEmCutoff);
    }
    return sum;
}

} // namespace

double eta_alternating(double s) {
    if (!(s > 0.0)) throw std::domain_error("eta_alternating: require s > 0");
    const int n = kChebyshevTerms;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        c = b - c;
        sum += c * std::pow(k + 1.0, -s);
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
    }
    return sum / d;
}

double zeta_numeric(double s) {
    if (!(s > 0.0)) throw std::domain_error("zeta_numeric: require s > 0");
    if (s == 1.0) throw std::domain_error("zeta_numeric: pole at s = 1");
    if (s < 1.0) return eta_alternating(s) / (1.0 - std::pow(2.0, 1.0 - s));
    return em_zeta(s);
}

double t_numeric(double s) {
    return (1.0 - std::pow(2.0, -s)) * zeta_numeric(s);
}

PiValue zeta_exact_even(unsigned k) {
    if (k == 0) throw std::domain_error("zeta_exact_even: require k >= 1");
    // (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
    Rational coeff = bernoulli(2 * k) * Rational(pow(BigInt(2), 2 * k), 2 * factorial(2 * k));
    if (k % 2 == 0) coeff = -coeff;
    return PiValue::pi_power(2 * k, coeff);
}

Rational zeta_exact_nonpositive(unsigned n) {
    if (n == 0) return Rational(-1, 2);
    return -bernoulli(n + 1) / Rational(static_cast<long long>(n) + 1);
}

} // namespace mzeta
