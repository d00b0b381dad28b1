#pragma once

#include <map>
#include <string>

#include "mzeta/rational.hpp"

namespace mzeta {

// Element of Q[pi^2]: a finite sum  q_0 + q_1 pi^2 + q_2 pi^4 + ...
// stored as a map from even exponent to nonzero rational coefficient.
class PiValue {
public:
    PiValue() = default; // zero
    explicit PiValue(Rational q);
    // single term coeff * pi^exponent; throws std::invalid_argument on odd exponent
    static PiValue pi_power(unsigned exponent, Rational coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const; // no term with exponent > 0
    Rational rational_part() const; // throws std::logic_error if a pi power is present
    const std::map<unsigned, Rational>& terms() const { return terms_; }

    PiValue& operator+=(const PiValue& o);
    PiValue& operator-=(const PiValue& o);
    PiValue& operator*=(const PiValue& o);
    friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
    friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
    friend PiValue operator*(const PiValue& a, const PiValue& b);
    PiValue operator-() const;
    PiValue scaled(const Rational& q) const;

    friend bool operator==(const PiValue&, const PiValue&) = default;

    double to_double() const;

    // Canonical form: terms in increasing pi exponent, coefficients in lowest
    // terms, joined by " + " / " - "; the pi factor is omitted at exponent 0.
    // Examples: "1/120 * pi^4", "-1/8", "0".
    std::string to_string() const;

private:
    std::map<unsigned, Rational> terms_;
    void add_term(unsigned exponent, const Rational& coeff);
};

} // namespace mzeta
