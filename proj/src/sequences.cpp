#include "mzeta/sequences.hpp"

#include <mutex>
#include <vector>

namespace mzeta {

namespace {

std::mutex g_factorial_mutex;
std::vector<BigInt> g_factorials{BigInt(1)};

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli; // filled lazily from B_0

std::mutex g_euler_mutex;
std::vector<BigInt> g_euler; // even-index secant numbers, g_euler[m] = E_{2m}

std::mutex g_stirling_mutex;
std::vector<std::vector<BigInt>> g_stirling; // row r holds |s(r, 0..r)|

} // namespace

BigInt factorial(unsigned n) {
    std::scoped_lock lock(g_factorial_mutex);
    while (g_factorials.size() <= n)
        g_factorials.push_back(g_factorials.back() * BigInt(g_factorials.size()));
    return g_factorials[n];
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    // multiplicative form keeps every intermediate an exact integer
    BigInt acc(1);
    for (unsigned i = 1; i <= k; ++i) {
        acc *= BigInt(n - k + i);
        acc /= BigInt(i);
    }
    return acc;
}

Rational bernoulli(unsigned n) {
    std::scoped_lock lock(g_bernoulli_mutex);
    if (g_bernoulli.empty()) g_bernoulli.emplace_back(1);
    while (g_bernoulli.size() <= n) {
        const unsigned m = static_cast<unsigned>(g_bernoulli.size());
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational acc;
        for (unsigned j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * g_bernoulli[j];
        g_bernoulli.push_back(-acc / Rational(static_cast<long long>(m) + 1));
    }
    return g_bernoulli[n];
}

BigInt euler_number(unsigned n) {
    if (n % 2 != 0) return BigInt(0);
    const unsigned m = n / 2;
    std::scoped_lock lock(g_euler_mutex);
    if (g_euler.empty()) g_euler.emplace_back(1);
    while (g_euler.size() <= m) {
        const unsigned even_n = 2 * static_cast<unsigned>(g_euler.size());
        // sum_{j even} C(n, j) E_j = 0 for even n >= 2
        BigInt acc(0);
        for (unsigned j = 0; j < even_n; j += 2)
            acc += binomial(even_n, j) * g_euler[j / 2];
        g_euler.push_back(-acc);
    }
    return g_euler[m];
}

BigInt stirling1_unsigned(unsigned r, unsigned k) {
    if (k > r) return BigInt(0);
    std::scoped_lock lock(g_stirling_mutex);
    if (g_stirling.empty()) g_stirling.push_back({BigInt(1)}); // |s(0,0)| = 1
    while (g_stirling.size() <= r) {
        const unsigned n = static_cast<unsigned>(g_stirling.size());
        const auto& prev = g_stirling[n - 1];
        std::vector<BigInt> row(n + 1, BigInt(0));
        // |s(n, k)| = |s(n-1, k-1)| + (n-1) |s(n-1, k)|
        for (unsigned j = 1; j <= n; ++j) {
            row[j] = prev[j - 1];
            if (j < n) row[j] += BigInt(n - 1) * prev[j];
        }
        g_stirling.push_back(std::move(row));
    }
    return g_stirling[r][k];
}

} // namespace mzeta
