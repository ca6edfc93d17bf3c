#pragma once

// Truncated formal power series in q with exact integer coefficients.
//
// A Series of order N stores the coefficients of q^0..q^N. Every operation on
// two series of equal order yields a series of the same order whose
// coefficients are exact through q^N; nothing above q^N is ever tracked.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qseries
{

using Integer = mpz_class;

class Series
{
public:
    // Zero series of the given order.
    explicit Series(std::size_t order);

    // Coefficients beyond `order` are dropped, missing ones are zero.
    Series(std::size_t order, std::vector<Integer> coeffs);
    Series(std::size_t order, std::initializer_list<long> coeffs);

    static Series zero(std::size_t order)
    {
        return Series(order);
    }
    static Series one(std::size_t order);
    // c * q^e, or the zero series when e > order.
    static Series monomial(std::size_t order, std::size_t e, const Integer &c = 1);

    std::size_t order() const
    {
        return coeffs_.size() - 1;
    }
    const Integer &operator[](std::size_t i) const
    {
        return coeffs_[i];
    }
    // Coefficient of q^i; zero for i outside [0, order].
    Integer coeff(std::int64_t i) const;

    std::span<const Integer> coeffs() const
    {
        return coeffs_;
    }

    // Adds c * q^e in place; ignored when e > order.
    Series &add_term(std::size_t e, const Integer &c);

    Series &operator+=(const Series &other);
    Series &operator-=(const Series &other);
    Series &operator*=(const Series &other);
    Series &operator*=(const Integer &c);

    // In place multiplication by (1 - sign*q^e) and division by the same
    // binomial. Division is exact: 1/(1 - a q^e) = sum a^j q^{je}.
    Series &times_binomial(int sign, std::size_t e);
    Series &over_binomial(int sign, std::size_t e);

    bool operator==(const Series &) const = default;

private:
    std::vector<Integer> coeffs_;
};

Series operator+(Series a, const Series &b);
Series operator-(Series a, const Series &b);
Series operator-(Series a);
Series operator*(const Series &a, const Series &b);
Series operator*(const Integer &c, Series a);

inline Series add(const Series &a, const Series &b)
{
    return a + b;
}
inline Series sub(const Series &a, const Series &b)
{
    return a - b;
}
inline Series negate(const Series &a)
{
    return -a;
}
// Truncated Cauchy product (schoolbook).
Series mul(const Series &a, const Series &b);

// q^m * a (shift(a, m)[n] = a[n - m]).
Series shift(const Series &a, std::size_t m);

// q^m * (a * b), computing only the coefficients that survive the shift.
Series mul_shifted(const Series &a, const Series &b, std::size_t m);

// a(q^m), truncated to a's order.
Series dilate(const Series &a, std::size_t m);

// Multiplicative inverse; the constant term must be +1 or -1.
Series invert(const Series &a);

// Specialization a = sign * q^offset of the q-Pochhammer symbol
// (a; q^step)_length = prod_{j < length} (1 - sign * q^{offset + step*j}).
//
// Note that `sign` is the sign of a itself: (q;q)_n has sign +1 and expands
// into factors (1 - q^i); (-q;q)_n has sign -1 and expands into (1 + q^i).
// Build specs through `of` / `negated` rather than by hand.
struct PochSpec {
    int sign = 1;
    std::size_t offset = 1;
    std::size_t step = 1;
    std::optional<std::size_t> length; // nullopt: infinite product

    // (q^offset; q^step)_length
    static PochSpec of(std::size_t offset, std::size_t step,
                       std::optional<std::size_t> length = std::nullopt);
    // (-q^offset; q^step)_length
    static PochSpec negated(std::size_t offset, std::size_t step,
                            std::optional<std::size_t> length = std::nullopt);

    bool operator==(const PochSpec &) const = default;
};

// Infinite products keep only the factors whose lowest exponent
// offset + step*j is <= order. Each dropped factor is 1 + O(q^{order+1}), so it
// cannot change any coefficient through q^order: the truncation is exact.
Series pochhammer(const PochSpec &spec, std::size_t order);

// 1 / pochhammer(spec), built by repeated exact division by each factor.
Series pochhammer_inverse(const PochSpec &spec, std::size_t order);

// Gaussian binomial [n, k] in base q^step, via the q-Pascal recurrence
// [n, k] = [n-1, k-1] + q^{step*k} [n-1, k]. Zero when k < 0 or k > n.
Series gaussian_binomial(std::int64_t n, std::int64_t k, std::size_t step, std::size_t order);

// [n, k] in base q^step for n = 0..n_max, sharing one q-Pascal sweep.
std::vector<Series> gaussian_binomial_column(std::int64_t k, std::int64_t n_max, std::size_t step,
                                             std::size_t order);

enum class ThetaKind {
    pentagonal_2k, // sum_{n=0}^{2k-1} (-1)^{T_n} q^{G_n}
    triangular_2k, // sum_{j=0}^{2k-1} (-q)^{T_j}
    square_k,      // 1 + 2 sum_{j=1}^{k} (-1)^j q^{j^2}
};

// Truncated theta sum of the given kind with q replaced by q^scale. The
// SQUARE_K_SCALED(r) family is theta_truncated(square_k, k, order, r).
Series theta_truncated(ThetaKind kind, std::int64_t k, std::size_t order, std::size_t scale = 1);

// Sparse rendering, e.g. "1 - q - q^2 + q^5".
std::string to_string(const Series &a);
std::ostream &operator<<(std::ostream &os, const Series &a);

} // namespace qseries
