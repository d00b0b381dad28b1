#include "mzeta/mzv.hpp"

#include <cmath>
#include <string>

namespace mzeta {

bool is_star(Family f) {
    return f == Family::ZetaStar || f == Family::TStar;
}

bool uses_t(Family f) {
    return f == Family::T || f == Family::TStar;
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Zeta: return "zeta";
        case Family::ZetaStar: return "zetastar";
        case Family::T: return "t";
        case Family::TStar: return "tstar";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "zeta") return Family::Zeta;
    if (name == "zetastar") return Family::ZetaStar;
    if (name == "t") return Family::T;
    if (name == "tstar") return Family::TStar;
    return std::nullopt;
}

std::string_view method_name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed_form";
        case Method::BellForm: return "bell_form";
        case Method::Recurrence: return "recurrence";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

pole_error::pole_error(unsigned j_, double s_)
    : std::domain_error("pole: j*s = 1 at j = " + std::to_string(j_) +
                        " (s = " + std::to_string(s_) + ")"),
      j(j_),
      s(s_) {}

std::vector<double> numeric_base_values(Family f, unsigned r, double s) {
    std::vector<double> base;
    base.reserve(r);
    for (unsigned j = 1; j <= r; ++j) {
        const double js = j * s;
        if (std::abs(js - 1.0) <= 1e-12) throw pole_error(j, s);
        base.push_back(uses_t(f) ? t_numeric(js) : zeta_numeric(js));
    }
    return base;
}

std::vector<PiValue> exact_base_values(Family f, unsigned r, long long s) {
    if (r > kExactDepthCap)
        throw std::domain_error("exact backend: depth exceeds cap of " +
                                std::to_string(kExactDepthCap));
    if (s == 1 || (s > 0 && s % 2 != 0))
        throw std::domain_error("exact backend: no closed form at odd positive arguments");

    std::vector<PiValue> base;
    base.reserve(r);
    for (unsigned j = 1; j <= r; ++j) {
        const long long js = static_cast<long long>(j) * s;
        PiValue zeta_js;
        if (js > 0)
            zeta_js = zeta_exact_even(static_cast<unsigned>(js / 2));
        else
            zeta_js = PiValue(zeta_exact_nonpositive(static_cast<unsigned>(-js)));
        if (!uses_t(f)) {
            base.push_back(std::move(zeta_js));
            continue;
        }
        // t(js) = (1 - 2^{-js}) zeta(js)
        Rational factor = js >= 0
                              ? Rational(1) - Rational(BigInt(1), pow(BigInt(2), static_cast<unsigned>(js)))
                              : Rational(1) - Rational(pow(BigInt(2), static_cast<unsigned>(-js)));
        base.push_back(zeta_js.scaled(factor));
    }
    return base;
}

double diagonal_closed_form(Family f, unsigned r, double s) {
    return closed_form_from_base(is_star(f), r, numeric_base_values(f, r, s));
}

double diagonal_bell_form(Family f, unsigned r, double s) {
    return bell_form_from_base(is_star(f), r, numeric_base_values(f, r, s));
}

double diagonal_recurrence(Family f, unsigned r, double s) {
    return recurrence_from_base(is_star(f), r, numeric_base_values(f, r, s));
}

PiValue diagonal_closed_form_exact(Family f, unsigned r, long long s) {
    return closed_form_from_base(is_star(f), r, exact_base_values(f, r, s));
}

PiValue diagonal_bell_form_exact(Family f, unsigned r, long long s) {
    return bell_form_from_base(is_star(f), r, exact_base_values(f, r, s));
}

PiValue diagonal_recurrence_exact(Family f, unsigned r, long long s) {
    return recurrence_from_base(is_star(f), r, exact_base_values(f, r, s));
}

namespace {

// Euler-Maclaurin estimate of the tail sum_{n > N} x_n for x_n = n^{-s}
// (zeta families) or (2n-1)^{-s} (t families).
double oracle_tail_sum(bool odd_denominators, double s, std::uint64_t n_trunc) {
    const double a = static_cast<double>(n_trunc) + 1.0;
    if (!odd_denominators) {
        const double g = std::pow(a, -s);
        return a * g / (s - 1.0) + 0.5 * g + s * g / a / 12.0;
    }
    const double u = 2.0 * a - 1.0;
    const double g = std::pow(u, -s);
    return u * g / (2.0 * (s - 1.0)) + 0.5 * g + s * g / u / 6.0;
}

} // namespace

OracleResult diagonal_oracle(Family f, unsigned r, double s, OracleConfig cfg) {
    if (!(s > 1.0)) throw divergence_error("oracle: series diverges for s <= 1");
    if (r > kOracleDepthCap)
        throw std::domain_error("oracle: depth exceeds cap of " + std::to_string(kOracleDepthCap));
    if (cfg.truncation < r)
        throw std::invalid_argument("oracle: truncation must be >= depth");

    OracleResult out;
    out.truncation = cfg.truncation;
    if (r == 0) {
        out.value = out.raw_value = 1.0;
        return out;
    }

    const bool star = is_star(f);
    const bool odd = uses_t(f);
    std::vector<double> acc(r + 1, 0.0);
    acc[0] = 1.0;
    for (std::uint64_t n = 1; n <= cfg.truncation; ++n) {
        const double x = odd ? std::pow(2.0 * static_cast<double>(n) - 1.0, -s)
                             : std::pow(static_cast<double>(n), -s);
        if (star) {
            // h_k^{(n)} = h_k^{(n-1)} + x_n h_{k-1}^{(n)}
            for (unsigned k = 1; k <= r; ++k) acc[k] += x * acc[k - 1];
        } else {
            // e_k^{(n)} = e_k^{(n-1)} + x_n e_{k-1}^{(n-1)}
            for (unsigned k = r; k >= 1; --k) acc[k] += x * acc[k - 1];
        }
    }

    out.raw_value = acc[r];
    const double tail = oracle_tail_sum(odd, s, cfg.truncation);
    // first-order correction: the missing selections start at some n > N,
    // contributing ~ f_{r-1}(N) * tail
    out.value = acc[r] + acc[r - 1] * tail;
    out.raw_tail_bound = 2.0 * std::abs(acc[r - 1]) * tail + 1e-13 * (1.0 + std::abs(acc[r]));
    const double second_order = r >= 2 ? std::max(1.0, std::abs(acc[r - 2])) : 1.0;
    out.tail_bound = 2.0 * tail * tail * second_order + 1e-12 * (1.0 + std::abs(out.value));
    return out;
}

} // namespace mzeta
