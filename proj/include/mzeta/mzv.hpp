#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mzeta/bell.hpp"
#include "mzeta/zeta.hpp"

namespace mzeta {

// The four diagonal families: zeta_r(s), zeta*_r(s), t_r(s), t*_r(s).
enum class Family { Zeta, ZetaStar, T, TStar };

bool is_star(Family f);
bool uses_t(Family f); // base function t instead of zeta
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

enum class Method { ClosedForm, BellForm, Recurrence, Oracle };
std::string_view method_name(Method m);

// Raised when some j*s hits the pole of the base function at 1.
struct pole_error : std::domain_error {
    unsigned j;
    double s;
    pole_error(unsigned j_, double s_);
};

// Raised when an oracle summation is requested outside the convergent region.
struct divergence_error : std::domain_error {
    using std::domain_error::domain_error;
};

inline constexpr unsigned kExactDepthCap = 32;
inline constexpr unsigned kOracleDepthCap = 12;

// ---- generic cores over precomputed base values base[j-1] = f(j s) ----

// sum over partitions (c_1..c_r) of r of  sign / prod_j (j^{c_j} c_j!)
// * prod_j base_j^{c_j}, with sign = +1 for star families and
// (-1)^{r + sum c_j} otherwise. r = 0 gives 1.
template <typename R>
R closed_form_from_base(bool star, unsigned r, const std::vector<R>& base) {
    if (r == 0) return ring_traits<R>::one();
    if (base.size() < r) throw std::invalid_argument("closed_form_from_base: base too short");
    R sum = ring_traits<R>::zero();
    for_each_partition(r, [&](const std::vector<unsigned>& c) {
        unsigned parts = 0;
        for (unsigned v : c) parts += v;
        R term = ring_traits<R>::one();
        for (unsigned j = 1; j <= r; ++j)
            if (c[j - 1]) term = term * ring_pow(base[j - 1], c[j - 1]);
        const bool negative = !star && ((r + parts) % 2 != 0);
        Rational coeff(negative ? BigInt(-1) : BigInt(1), partition_z(c));
        sum = sum + ring_traits<R>::scale(term, coeff);
    });
    return sum;
}

// (-1)^r / r! * Y_r(-0! b_1, ..., -(r-1)! b_r) for the plain families and
// 1/r! * Y_r(0! b_1, ..., (r-1)! b_r) for the star families.
template <typename R>
R bell_form_from_base(bool star, unsigned r, const std::vector<R>& base) {
    if (r == 0) return ring_traits<R>::one();
    if (base.size() < r) throw std::invalid_argument("bell_form_from_base: base too short");
    std::vector<R> xs;
    xs.reserve(r);
    for (unsigned j = 1; j <= r; ++j) {
        Rational w(star ? factorial(j - 1) : -factorial(j - 1));
        xs.push_back(ring_traits<R>::scale(base[j - 1], w));
    }
    R y = complete_bell(r, xs);
    Rational front(star || r % 2 == 0 ? BigInt(1) : BigInt(-1), factorial(r));
    return ring_traits<R>::scale(y, front);
}

// Newton-identity recurrence, bottom-up from depth 0:
// n f_n = sum_{j=1}^{n} sigma_j f_{n-j} b_j with sigma_j = (-1)^{j-1}
// for the plain families and +1 for the star families.
template <typename R>
R recurrence_from_base(bool star, unsigned r, const std::vector<R>& base) {
    if (r == 0) return ring_traits<R>::one();
    if (base.size() < r) throw std::invalid_argument("recurrence_from_base: base too short");
    std::vector<R> f;
    f.reserve(r + 1);
    f.push_back(ring_traits<R>::one());
    for (unsigned n = 1; n <= r; ++n) {
        R acc = ring_traits<R>::zero();
        for (unsigned j = 1; j <= n; ++j) {
            R term = f[n - j] * base[j - 1];
            if (!star && j % 2 == 0) term = ring_traits<R>::scale(term, Rational(-1));
            acc = acc + term;
        }
        f.push_back(ring_traits<R>::scale(acc, Rational(BigInt(1), BigInt(n))));
    }
    return f[r];
}

// base[j-1] = zeta(j s) or t(j s); throws pole_error when |j s - 1| <= 1e-12,
// std::domain_error when j s <= 0.
std::vector<double> numeric_base_values(Family f, unsigned r, double s);

// Exact counterpart for s even positive, zero, or a negative integer.
std::vector<PiValue> exact_base_values(Family f, unsigned r, long long s);

double diagonal_closed_form(Family f, unsigned r, double s);
double diagonal_bell_form(Family f, unsigned r, double s);
double diagonal_recurrence(Family f, unsigned r, double s);

PiValue diagonal_closed_form_exact(Family f, unsigned r, long long s);
PiValue diagonal_bell_form_exact(Family f, unsigned r, long long s);
PiValue diagonal_recurrence_exact(Family f, unsigned r, long long s);

struct OracleConfig {
    std::uint64_t truncation = 5000; // must be >= depth
};

struct OracleResult {
    double value;          // truncated sum plus first-order integral tail correction
    double tail_bound;     // crude bound on |true - value|
    double raw_value;      // plain truncated e_r / h_r over the first N terms
    double raw_tail_bound; // crude bound on |true - raw_value|, ~ f_{r-1}(N) * tail integral
    std::uint64_t truncation = 0;
};

// Truncated-series evaluation of e_r / h_r by the incremental symmetric-
// function updates; independent of every closed form. Requires s > 1.
OracleResult diagonal_oracle(Family f, unsigned r, double s, OracleConfig cfg = {});

} // namespace mzeta
