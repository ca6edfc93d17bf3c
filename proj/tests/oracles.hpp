#pragma once

// Test-only oracles. Nothing here calls into the series arithmetic it checks.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include <qseries/series.hpp>

namespace oracle
{

using Poly = std::vector<mpz_class>;

// Schoolbook product of two coefficient lists, truncated to `order`.
inline Poly naive_mul(const Poly &a, const Poly &b, std::size_t order)
{
    Poly out(order + 1);
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Exact long division of polynomials whose divisor has constant term +-1
// and whose quotient is known to be a polynomial.
inline Poly exact_divide(Poly num, const Poly &den)
{
    Poly quot(num.size());
    for (std::size_t n = 0; n < num.size(); ++n) {
        mpz_class c = num[n] / den[0];
        quot[n] = c;
        for (std::size_t i = 0; i < den.size() && n + i < num.size(); ++i) {
            num[n + i] -= c * den[i];
        }
    }
    return quot;
}

// prod (1 - q^e) over the listed exponents, as a full polynomial.
inline Poly expand_factors(const std::vector<std::pair<int, std::size_t>> &factors)
{
    Poly p{1};
    for (auto [sign, e] : factors) {
        Poly f(e + 1);
        f[0] = 1;
        f[e] = -sign;
        p = naive_mul(p, f, p.size() + e - 1);
    }
    return p;
}

// Number of partitions of n with every part in [1, max_part], by recursion.
inline std::int64_t count_partitions(std::int64_t n, std::int64_t max_part)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for (std::int64_t part = std::min(n, max_part); part >= 1; --part) {
        total += count_partitions(n - part, part);
    }
    return total;
}

// Partitions of n into distinct parts, each at most max_part.
inline std::int64_t count_distinct(std::int64_t n, std::int64_t max_part)
{
    if (n == 0) {
        return 1;
    }
    std::int64_t total = 0;
    for (std::int64_t part = std::min(n, max_part); part >= 1; --part) {
        total += count_distinct(n - part, part - 1);
    }
    return total;
}

inline Poly to_poly(const qseries::Series &s)
{
    return Poly(s.coeffs().begin(), s.coeffs().end());
}

inline qseries::Series random_series(std::mt19937_64 &rng, std::size_t order, long bound = 50)
{
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<qseries::Integer> c(order + 1);
    for (auto &x : c) {
        x = coeff(rng);
    }
    return qseries::Series(order, std::move(c));
}

} // namespace oracle
