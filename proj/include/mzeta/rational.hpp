#pragma once

#include <compare>
#include <string>

#include "mzeta/bigint.hpp"

namespace mzeta {

// Arbitrary-precision signed rational, kept normalized after every operation:
// gcd(|num|, den) == 1 and den > 0. Zero is stored as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den); // throws std::domain_error on den == 0
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o); // throws std::domain_error on division by zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    std::strong_ordering operator<=>(const Rational& o) const;

    // Overflow-safe: scales numerator and denominator separately before dividing.
    double to_double() const;
    std::string to_string() const; // "a" when integral, "a/b" otherwise

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned exp);

} // namespace mzeta
