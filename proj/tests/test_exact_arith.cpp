#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "mzeta/pi_value.hpp"
#include "mzeta/rational.hpp"
#include "mzeta/sequences.hpp"

using namespace mzeta;

TEST_CASE("rational normalization and invariants") {
    Rational q(BigInt(6), BigInt(-8));
    CHECK(q.num() == -3);
    CHECK(q.den() == 4);
    CHECK(Rational(BigInt(0), BigInt(5)) == Rational());
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);

    CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
    CHECK(Rational(3, 4) / Rational(-3, 2) == Rational(-1, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(), std::domain_error);

    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(-1, 2), 0) == Rational(1));
    CHECK(abs(Rational(-3, 8)) == Rational(3, 8));
}

TEST_CASE("rational gcd normalization survives random arithmetic") {
    std::mt19937 rng(20240517u);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int i = 0; i < 300; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        for (Rational v : {a + b, a - b, a * b}) {
            CHECK(v.den() > 0);
            CHECK(gcd(abs(v.num()), v.den()) == 1);
        }
    }
}

TEST_CASE("rational to_double and to_string") {
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(Rational(-7, 2).to_double() == -3.5);
    CHECK(Rational().to_double() == 0.0);
    CHECK(Rational(3, 8).to_string() == "3/8");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(7).to_string() == "7");

    // values far beyond the double mantissa still convert accurately
    Rational huge(pow(BigInt(10), 60) + 1, pow(BigInt(10), 60));
    CHECK(huge.to_double() == doctest::Approx(1.0).epsilon(1e-15));
    Rational big_ratio(binomial(200, 100), pow(BigInt(4), 100));
    CHECK(big_ratio.to_double() * std::sqrt(std::numbers::pi * 100) ==
          doctest::Approx(0.99875078612625195).epsilon(1e-12));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(21) == BigInt("51090942171709440000"));
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));

    // Pascal identity on a random grid
    std::mt19937 rng(7u);
    std::uniform_int_distribution<unsigned> dist(1, 60);
    for (int i = 0; i < 100; ++i) {
        unsigned n = dist(rng);
        unsigned k = std::uniform_int_distribution<unsigned>(1, n)(rng);
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    // hand-derived from the defining recurrence sum C(n+1,j) B_j = 0
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    // classical table values
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(8) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));

    for (unsigned k = 1; k <= 19; ++k) CHECK(bernoulli(2 * k + 1).is_zero());

    // defining recurrence holds for every table entry we expose
    for (unsigned n = 1; n <= 24; ++n) {
        Rational acc;
        for (unsigned j = 0; j <= n; ++j) acc += Rational(binomial(n + 1, j)) * bernoulli(j);
        CHECK(acc.is_zero());
    }

    // sign alternation of the even values
    for (unsigned k = 1; k <= 15; ++k) {
        const int expected = k % 2 == 1 ? 1 : -1;
        CHECK(bernoulli(2 * k).sign() == expected);
    }
}

TEST_CASE("euler secant numbers") {
    CHECK(euler_number(0) == 1);
    // hand-derived from the sech recurrence
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    // classical table values
    CHECK(euler_number(6) == -61);
    CHECK(euler_number(8) == 1385);
    CHECK(euler_number(10) == -50521);
    CHECK(euler_number(16) == BigInt("19391512145"));
    for (unsigned n = 1; n <= 21; n += 2) CHECK(euler_number(n) == 0);

    for (unsigned n = 2; n <= 24; n += 2) {
        BigInt acc(0);
        for (unsigned j = 0; j <= n; j += 2) acc += binomial(n, j) * euler_number(j);
        CHECK(acc == 0);
    }
}

namespace {

// independent route: expand x(x+1)...(x+r-1) by explicit polynomial multiplication
std::vector<BigInt> rising_factorial_coeffs(unsigned r) {
    std::vector<BigInt> poly{BigInt(0), BigInt(1)}; // x
    for (unsigned i = 1; i < r; ++i) {
        std::vector<BigInt> next(poly.size() + 1, BigInt(0));
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * BigInt(i); // * i
            next[d + 1] += poly[d];         // * x
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace

TEST_CASE("unsigned stirling numbers of the first kind") {
    CHECK(stirling1_unsigned(3, 2) == 3);
    CHECK(stirling1_unsigned(4, 2) == 11);
    CHECK(stirling1_unsigned(5, 5) == 1);
    CHECK(stirling1_unsigned(4, 1) == 6);
    CHECK(stirling1_unsigned(4, 5) == 0);
    CHECK(stirling1_unsigned(3, 0) == 0);
    CHECK(stirling1_unsigned(0, 0) == 1);

    for (unsigned r = 1; r <= 10; ++r) {
        const auto coeffs = rising_factorial_coeffs(r);
        for (unsigned k = 0; k <= r; ++k) CHECK(stirling1_unsigned(r, k) == coeffs[k]);
    }

    // row sums give r!, and the polynomial identity holds at small integers
    for (unsigned r = 1; r <= 10; ++r) {
        BigInt row(0);
        for (unsigned k = 1; k <= r; ++k) row += stirling1_unsigned(r, k);
        CHECK(row == factorial(r));

        for (long long x = 1; x <= 5; ++x) {
            BigInt lhs(0);
            BigInt xp(1);
            for (unsigned k = 1; k <= r; ++k) {
                xp *= x;
                lhs += stirling1_unsigned(r, k) * xp;
            }
            BigInt rhs(1);
            for (unsigned i = 0; i < r; ++i) rhs *= BigInt(x + i);
            CHECK(lhs == rhs);
        }
    }
}

namespace {

PiValue random_pi_value(std::mt19937& rng) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    PiValue v;
    for (unsigned e : {0u, 2u, 4u})
        v += PiValue::pi_power(e, Rational(num(rng), den(rng)));
    return v;
}

} // namespace

TEST_CASE("pi_value construction and canonical strings") {
    CHECK_THROWS_AS(PiValue::pi_power(3, Rational(1)), std::invalid_argument);
    CHECK(PiValue::pi_power(2, Rational()).is_zero());
    CHECK(PiValue().to_string() == "0");
    CHECK(PiValue::pi_power(4, Rational(1, 120)).to_string() == "1/120 * pi^4");
    CHECK(PiValue(Rational(-1, 8)).to_string() == "-1/8");
    CHECK(PiValue(Rational(3)).to_string() == "3");

    PiValue mixed = PiValue(Rational(1, 2)) + PiValue::pi_power(2, Rational(-1, 3)) +
                    PiValue::pi_power(6, Rational(5));
    CHECK(mixed.to_string() == "1/2 - 1/3 * pi^2 + 5 * pi^6");

    CHECK(mixed.is_rational() == false);
    CHECK_THROWS_AS(mixed.rational_part(), std::logic_error);
    CHECK(PiValue(Rational(3, 4)).rational_part() == Rational(3, 4));
    CHECK(PiValue().rational_part() == Rational());

    const double pi = std::numbers::pi;
    CHECK(PiValue::pi_power(2, Rational(1, 6)).to_double() ==
          doctest::Approx(pi * pi / 6).epsilon(1e-15));
}

TEST_CASE("pi_value ring axioms on random inputs") {
    std::mt19937 rng(99u);
    const PiValue one(Rational(1));
    for (int i = 0; i < 60; ++i) {
        PiValue a = random_pi_value(rng);
        PiValue b = random_pi_value(rng);
        PiValue c = random_pi_value(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
        CHECK(a - a == PiValue());
        CHECK(a.scaled(Rational(2, 3)).scaled(Rational(3, 2)) == a);
    }

    // multiplication adds exponents
    PiValue p = PiValue::pi_power(2, Rational(1, 2)) * PiValue::pi_power(4, Rational(4));
    CHECK(p == PiValue::pi_power(6, Rational(2)));
}

TEST_CASE("memo tables are safe under concurrent access") {
    std::vector<Rational> expected_b;
    for (unsigned n = 0; n <= 40; ++n) expected_b.push_back(bernoulli(n));
    const BigInt expected_s = stirling1_unsigned(30, 12);
    const BigInt expected_e = euler_number(20);

    std::vector<std::thread> workers;
    std::vector<int> failures(8, 0);
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] {
            for (int round = 0; round < 20; ++round) {
                for (unsigned n = 0; n <= 40; ++n)
                    if (bernoulli(n) != expected_b[n]) ++failures[t];
                if (stirling1_unsigned(30, 12) != expected_s) ++failures[t];
                if (euler_number(20) != expected_e) ++failures[t];
                if (factorial(25) != factorial(24) * 25) ++failures[t];
            }
        });
    }
    for (auto& w : workers) w.join();
    for (int f : failures) CHECK(f == 0);
}
