#pragma once

#include <stdexcept>
#include <vector>

#include "mzeta/partitions.hpp"
#include "mzeta/pi_value.hpp"
#include "mzeta/rational.hpp"
#include "mzeta/sequences.hpp"

namespace mzeta {

// Minimal commutative-ring interface used by the Bell evaluators: the ring
// must provide +, * and scaling by an exact rational. Backends: double,
// Rational, PiValue (tests add a sparse polynomial ring).
template <typename R>
struct ring_traits;

template <>
struct ring_traits<double> {
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double scale(double x, const Rational& q) { return x * q.to_double(); }
};

template <>
struct ring_traits<Rational> {
    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }
    static Rational scale(const Rational& x, const Rational& q) { return x * q; }
};

template <>
struct ring_traits<PiValue> {
    static PiValue zero() { return PiValue(); }
    static PiValue one() { return PiValue(Rational(1)); }
    static PiValue scale(const PiValue& x, const Rational& q) { return x.scaled(q); }
};

template <typename R>
R ring_pow(R base, unsigned e) {
    R acc = ring_traits<R>::one();
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

// n! / prod_i (i!)^{c_i} c_i!  -- always integral; throws std::logic_error otherwise.
BigInt bell_coefficient(unsigned n, const std::vector<unsigned>& counts);

// z_lambda = prod_i i^{c_i} c_i!, the partition symmetry factor of the
// closed-form expansions.
BigInt partition_z(const std::vector<unsigned>& counts);

// Partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}): the sum over
// partitions of n into exactly k parts of bell_coefficient * prod x_i^{c_i}.
template <typename R>
R partial_bell(unsigned n, unsigned k, const std::vector<R>& xs) {
    if (k > n) throw std::domain_error("partial_bell: require k <= n");
    if (n == 0) return ring_traits<R>::one(); // B_{0,0} = 1
    if (k == 0) return ring_traits<R>::zero();
    if (xs.size() < n - k + 1)
        throw std::invalid_argument("partial_bell: xs must have length >= n-k+1");
    R sum = ring_traits<R>::zero();
    for_each_partition(n, [&](const std::vector<unsigned>& c) {
        unsigned parts = 0;
        for (unsigned v : c) parts += v;
        if (parts != k) return;
        R term = ring_traits<R>::one();
        for (unsigned i = 1; i <= n; ++i)
            if (c[i - 1]) term = term * ring_pow(xs[i - 1], c[i - 1]);
        sum = sum + ring_traits<R>::scale(term, Rational(bell_coefficient(n, c)));
    });
    return sum;
}

// Complete Bell polynomial Y_n(x_1, ..., x_n) as the direct partition sum;
// Y_0 = 1. Equals sum_k B_{n,k} (checked in tests).
template <typename R>
R complete_bell(unsigned n, const std::vector<R>& xs) {
    if (n == 0) return ring_traits<R>::one();
    if (xs.size() < n) throw std::invalid_argument("complete_bell: xs must have length >= n");
    R sum = ring_traits<R>::zero();
    for_each_partition(n, [&](const std::vector<unsigned>& c) {
        R term = ring_traits<R>::one();
        for (unsigned i = 1; i <= n; ++i)
            if (c[i - 1]) term = term * ring_pow(xs[i - 1], c[i - 1]);
        sum = sum + ring_traits<R>::scale(term, Rational(bell_coefficient(n, c)));
    });
    return sum;
}

// Expands exp(sum_m x_m t^m / m!) as a truncated formal power series over
// exact rationals and confirms the coefficient of t^n/n! equals
// complete_bell(n, xs) for every n <= n_max. n_max beyond n_cap is rejected
// (factorial growth makes larger orders slow without being more informative).
bool complete_bell_series_check(unsigned n_max, const std::vector<Rational>& xs,
                                unsigned n_cap = 20);

} // namespace mzeta
