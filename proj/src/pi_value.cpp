#include "mzeta/pi_value.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mzeta {

PiValue::PiValue(Rational q) {
    add_term(0, q);
}

PiValue PiValue::pi_power(unsigned exponent, Rational coeff) {
    if (exponent % 2 != 0)
        throw std::invalid_argument("PiValue: exponents must be even");
    PiValue v;
    v.add_term(exponent, coeff);
    return v;
}

void PiValue::add_term(unsigned exponent, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool PiValue::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational PiValue::rational_part() const {
    if (terms_.empty()) return Rational();
    if (!is_rational()) throw std::logic_error("PiValue: not a pure rational");
    return terms_.begin()->second;
}

PiValue& PiValue::operator+=(const PiValue& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PiValue& PiValue::operator-=(const PiValue& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PiValue operator*(const PiValue& a, const PiValue& b) {
    PiValue prod;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) prod.add_term(ea + eb, ca * cb);
    return prod;
}

PiValue& PiValue::operator*=(const PiValue& o) {
    *this = *this * o;
    return *this;
}

PiValue PiValue::operator-() const {
    PiValue r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PiValue PiValue::scaled(const Rational& q) const {
    PiValue r;
    if (q.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * q);
    return r;
}

double PiValue::to_double() const {
    double sum = 0.0;
    for (const auto& [e, c] : terms_)
        sum += c.to_double() * std::pow(std::numbers::pi, static_cast<double>(e));
    return sum;
}

std::string PiValue::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        out += mag.to_string();
        if (e != 0) out += " * pi^" + std::to_string(e);
    }
    return out;
}

} // namespace mzeta
