#include "mzeta/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace mzeta {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    BigInt lhs = num_ * o.den_;
    BigInt rhs = o.num_ * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

// Top ~62 bits as a double plus a power-of-two exponent, so that huge values
// never round-trip through an overflowing conversion.
std::pair<double, long> to_scaled_double(const BigInt& v) {
    if (v.is_zero()) return {0.0, 0};
    BigInt a = boost::multiprecision::abs(v);
    const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
    long shift = bits - 62;
    if (shift > 0)
        a >>= shift;
    else
        shift = 0;
    double mant = a.convert_to<double>();
    if (v.sign() < 0) mant = -mant;
    return {mant, shift};
}

} // namespace

double Rational::to_double() const {
    if (num_.is_zero()) return 0.0;
    auto [mn, en] = to_scaled_double(num_);
    auto [md, ed] = to_scaled_double(den_);
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

std::string Rational::to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational abs(const Rational& q) {
    return q.sign() < 0 ? -q : q;
}

Rational pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    Rational b = base;
    while (exp) {
        if (exp & 1u) acc *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return acc;
}

} // namespace mzeta
