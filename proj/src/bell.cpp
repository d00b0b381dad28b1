#include "mzeta/bell.hpp"

namespace mzeta {

BigInt bell_coefficient(unsigned n, const std::vector<unsigned>& counts) {
    BigInt denom(1);
    for (unsigned i = 1; i <= counts.size(); ++i) {
        const unsigned c = counts[i - 1];
        if (!c) continue;
        denom *= pow(factorial(i), c) * factorial(c);
    }
    BigInt num = factorial(n);
    BigInt q = num / denom;
    if (q * denom != num)
        throw std::logic_error("bell_coefficient: multinomial is not integral");
    return q;
}

BigInt partition_z(const std::vector<unsigned>& counts) {
    BigInt z(1);
    for (unsigned i = 1; i <= counts.size(); ++i) {
        const unsigned c = counts[i - 1];
        if (!c) continue;
        z *= pow(BigInt(i), c) * factorial(c);
    }
    return z;
}

bool complete_bell_series_check(unsigned n_max, const std::vector<Rational>& xs, unsigned n_cap) {
    if (n_max > n_cap)
        throw std::domain_error("complete_bell_series_check: n_max exceeds the configured cap");
    if (xs.size() < n_max)
        throw std::invalid_argument("complete_bell_series_check: xs must have length >= n_max");

    // s[m] = x_m / m!, the coefficients of S(t) = sum x_m t^m / m!
    std::vector<Rational> s(n_max + 1);
    for (unsigned m = 1; m <= n_max; ++m) s[m] = xs[m - 1] / Rational(factorial(m));

    // exp(S) by the power-series ODE  E' = S' E:
    // n e_n = sum_{m=1}^{n} m s_m e_{n-m}
    std::vector<Rational> e(n_max + 1);
    e[0] = Rational(1);
    for (unsigned n = 1; n <= n_max; ++n) {
        Rational acc;
        for (unsigned m = 1; m <= n; ++m)
            acc += Rational(static_cast<long long>(m)) * s[m] * e[n - m];
        e[n] = acc / Rational(static_cast<long long>(n));
    }

    for (unsigned n = 0; n <= n_max; ++n) {
        const Rational from_series = e[n] * Rational(factorial(n));
        if (from_series != complete_bell(n, xs)) return false;
    }
    return true;
}

} // namespace mzeta
