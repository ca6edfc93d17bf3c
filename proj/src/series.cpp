#include <qseries/series.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <qseries/figurate.hpp>

namespace qseries
{

namespace
{

void require_same_order(const Series &a, const Series &b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a.order()) + " vs "
                                    + std::to_string(b.order()));
    }
}

} // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

Series::Series(std::size_t order, std::initializer_list<long> coeffs) : coeffs_(order + 1)
{
    std::size_t i = 0;
    for (auto c : coeffs) {
        if (i > order) {
            break;
        }
        coeffs_[i++] = c;
    }
}

Series Series::one(std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(std::size_t order, std::size_t e, const Integer &c)
{
    Series s(order);
    s.add_term(e, c);
    return s;
}

Integer Series::coeff(std::int64_t i) const
{
    if (i < 0 || static_cast<std::size_t>(i) > order()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Series &Series::add_term(std::size_t e, const Integer &c)
{
    if (e <= order()) {
        coeffs_[e] += c;
    }
    return *this;
}

Series &Series::operator+=(const Series &other)
{
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Series &Series::operator-=(const Series &other)
{
    require_same_order(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Series &Series::operator*=(const Series &other)
{
    *this = mul(*this, other);
    return *this;
}

Series &Series::operator*=(const Integer &c)
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

Series &Series::times_binomial(int sign, std::size_t e)
{
    if (e == 0) {
        throw std::invalid_argument("binomial factor needs a positive exponent");
    }
    // Descending so that coeffs_[n - e] is still the old value.
    for (std::size_t n = order(); n >= e; --n) {
        if (sign > 0) {
            coeffs_[n] -= coeffs_[n - e];
        } else {
            coeffs_[n] += coeffs_[n - e];
        }
        if (n == e) {
            break;
        }
    }
    return *this;
}

Series &Series::over_binomial(int sign, std::size_t e)
{
    if (e == 0) {
        throw std::invalid_argument("binomial factor needs a positive exponent");
    }
    // r = s / (1 - sign q^e)  <=>  r[n] = s[n] + sign * r[n - e].
    for (std::size_t n = e; n <= order(); ++n) {
        if (sign > 0) {
            coeffs_[n] += coeffs_[n - e];
        } else {
            coeffs_[n] -= coeffs_[n - e];
        }
    }
    return *this;
}

Series operator+(Series a, const Series &b)
{
    a += b;
    return a;
}

Series operator-(Series a, const Series &b)
{
    a -= b;
    return a;
}

Series operator-(Series a)
{
    a *= Integer(-1);
    return a;
}

Series operator*(const Series &a, const Series &b)
{
    return mul(a, b);
}

Series operator*(const Integer &c, Series a)
{
    a *= c;
    return a;
}

Series mul(const Series &a, const Series &b)
{
    require_same_order(a, b);
    return mul_shifted(a, b, 0);
}

Series mul_shifted(const Series &a, const Series &b, std::size_t m)
{
    require_same_order(a, b);
    const auto n = a.order();
    Series out(n);
    if (m > n) {
        return out;
    }
    const auto top = n - m;
    std::vector<Integer> acc(top + 1);
    // Skip zero coefficients: many operands here are sparse theta sums.
    std::vector<std::size_t> nz_b;
    for (std::size_t j = 0; j <= top; ++j) {
        if (sgn(b[j]) != 0) {
            nz_b.push_back(j);
        }
    }
    for (std::size_t i = 0; i <= top; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (auto j : nz_b) {
            if (i + j > top) {
                break;
            }
            mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i <= top; ++i) {
        out.add_term(i + m, acc[i]);
    }
    return out;
}

Series shift(const Series &a, std::size_t m)
{
    Series out(a.order());
    for (std::size_t i = 0; i + m <= a.order(); ++i) {
        out.add_term(i + m, a[i]);
    }
    return out;
}

Series dilate(const Series &a, std::size_t m)
{
    if (m == 0) {
        throw std::invalid_argument("dilation factor must be positive");
    }
    Series out(a.order());
    for (std::size_t i = 0; i * m <= a.order(); ++i) {
        out.add_term(i * m, a[i]);
    }
    return out;
}

Series invert(const Series &a)
{
    const auto &a0 = a[0];
    if (a0 != 1 && a0 != -1) {
        throw std::domain_error("non-invertible series");
    }
    const auto n = a.order();
    std::vector<Integer> b(n + 1);
    b[0] = a0; // 1/a0 == a0 for a unit
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(a[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
            }
        }
        // b_k = -(1/a0) * acc
        b[k] = (a0 > 0) ? Integer(-acc) : acc;
    }
    return Series(n, std::move(b));
}

PochSpec PochSpec::of(std::size_t offset, std::size_t step, std::optional<std::size_t> length)
{
    if (offset < 1 || step < 1) {
        throw std::invalid_argument("PochSpec needs offset >= 1 and step >= 1");
    }
    return PochSpec{1, offset, step, length};
}

PochSpec PochSpec::negated(std::size_t offset, std::size_t step, std::optional<std::size_t> length)
{
    auto spec = of(offset, step, length);
    spec.sign = -1;
    return spec;
}

namespace
{

// Number of factors that can affect coefficients through q^order.
std::size_t effective_length(const PochSpec &spec, std::size_t order)
{
    if (spec.offset < 1 || spec.step < 1 || (spec.sign != 1 && spec.sign != -1)) {
        throw std::invalid_argument("invalid PochSpec");
    }
    std::size_t live = spec.offset > order ? 0 : (order - spec.offset) / spec.step + 1;
    return spec.length ? std::min(*spec.length, live) : live;
}

} // namespace

Series pochhammer(const PochSpec &spec, std::size_t order)
{
    auto s = Series::one(order);
    const auto n = effective_length(spec, order);
    for (std::size_t j = 0; j < n; ++j) {
        s.times_binomial(spec.sign, spec.offset + spec.step * j);
    }
    return s;
}

Series pochhammer_inverse(const PochSpec &spec, std::size_t order)
{
    auto s = Series::one(order);
    const auto n = effective_length(spec, order);
    for (std::size_t j = 0; j < n; ++j) {
        s.over_binomial(spec.sign, spec.offset + spec.step * j);
    }
    return s;
}

std::vector<Series> gaussian_binomial_column(std::int64_t k, std::int64_t n_max, std::size_t step,
                                             std::size_t order)
{
    if (step < 1) {
        throw std::invalid_argument("gaussian binomial step must be positive");
    }
    std::vector<Series> column;
    if (n_max < 0) {
        return column;
    }
    column.reserve(static_cast<std::size_t>(n_max + 1));
    if (k < 0) {
        column.assign(static_cast<std::size_t>(n_max + 1), Series(order));
        return column;
    }
    // row[c] holds [n, c] for c = 0..k.
    std::vector<Series> row(static_cast<std::size_t>(k + 1), Series(order));
    row[0] = Series::one(order);
    column.push_back(row[static_cast<std::size_t>(k)]);
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t c = std::min(n, k); c >= 1; --c) {
            auto &cur = row[static_cast<std::size_t>(c)];
            auto shifted = shift(cur, step * static_cast<std::size_t>(c));
            shifted += row[static_cast<std::size_t>(c - 1)];
            cur = std::move(shifted);
        }
        column.push_back(row[static_cast<std::size_t>(k)]);
    }
    return column;
}

Series gaussian_binomial(std::int64_t n, std::int64_t k, std::size_t step, std::size_t order)
{
    if (k < 0 || k > n) {
        return Series(order);
    }
    // [n, k] == [n, n-k] as polynomials; sweep the narrower column.
    const auto narrow = std::min(k, n - k);
    return gaussian_binomial_column(narrow, n, step, order).back();
}

Series theta_truncated(ThetaKind kind, std::int64_t k, std::size_t order, std::size_t scale)
{
    if (k < 1) {
        throw std::invalid_argument("theta truncation needs k >= 1");
    }
    if (scale < 1) {
        throw std::invalid_argument("theta scale must be positive");
    }
    Series s(order);
    const auto at = [&](std::int64_t e) { return static_cast<std::size_t>(e) * scale; };
    switch (kind) {
        case ThetaKind::pentagonal_2k:
            for (std::int64_t n = 0; n < 2 * k; ++n) {
                s.add_term(at(gen_pentagonal(n)), triangular_sign(n));
            }
            break;
        case ThetaKind::triangular_2k:
            for (std::int64_t j = 0; j < 2 * k; ++j) {
                s.add_term(at(triangular(j)), triangular_sign(j));
            }
            break;
        case ThetaKind::square_k:
            s.add_term(0, 1);
            for (std::int64_t j = 1; j <= k; ++j) {
                s.add_term(at(square(j)), (j % 2 == 0) ? 2 : -2);
            }
            break;
    }
    return s;
}

std::string to_string(const Series &a)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        const auto &c = a[i];
        if (sgn(c) == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) {
                os << '-';
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) {
            os << mag << '*';
        }
        os << 'q';
        if (i > 1) {
            os << '^' << i;
        }
    }
    if (first) {
        os << '0';
    }
    os << " + O(q^" << (a.order() + 1) << ')';
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const Series &a)
{
    return os << to_string(a);
}

} // namespace qseries
