#include <random>
#include <stdexcept>

#include <doctest.h>

#include <qseries/figurate.hpp>
#include <qseries/series.hpp>

#include "oracles.hpp"

using namespace qseries;

namespace
{

Series poly(std::size_t order, std::initializer_list<long> c)
{
    return Series(order, c);
}

} // namespace

TEST_CASE("zero and one")
{
    CHECK(Series::zero(3) == poly(3, {0, 0, 0, 0}));
    CHECK(Series::zero(0).order() == 0);
    CHECK(Series::zero(0)[0] == 0);
    CHECK(Series::one(2) == poly(2, {1, 0, 0}));
    CHECK(Series::one(0) == poly(0, {1}));

    std::mt19937_64 rng(7);
    auto x = oracle::random_series(rng, 5);
    CHECK(Series::zero(5) + x == x);
    CHECK(mul(Series::one(5), x) == x);
}

TEST_CASE("add, sub, negate")
{
    CHECK(poly(1, {1, 2}) + poly(1, {0, 3}) == poly(1, {1, 5}));
    std::mt19937_64 rng(11);
    auto x = oracle::random_series(rng, 9);
    CHECK(x - x == Series::zero(9));
    CHECK(negate(negate(x)) == x);
    CHECK_THROWS_AS(add(Series::zero(2), Series::zero(3)), std::invalid_argument);
    CHECK_THROWS_AS(mul(Series::zero(2), Series::zero(3)), std::invalid_argument);
}

TEST_CASE("mul")
{
    CHECK(mul(poly(2, {1, 1}), poly(2, {1, -1})) == poly(2, {1, 0, -1}));

    SUBCASE("matches the schoolbook oracle and commutes")
    {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<std::size_t> ord(0, 64);
        for (int iter = 0; iter < 1000; ++iter) {
            const auto n = ord(rng);
            auto a = oracle::random_series(rng, n);
            auto b = oracle::random_series(rng, n);
            auto ab = mul(a, b);
            REQUIRE(oracle::to_poly(ab) == oracle::naive_mul(oracle::to_poly(a), oracle::to_poly(b), n));
            REQUIRE(ab == mul(b, a));
        }
    }
}

TEST_CASE("shift and dilate")
{
    CHECK(shift(poly(2, {1, 1, 0}), 1) == poly(2, {0, 1, 1}));
    std::mt19937_64 rng(3);
    auto x = oracle::random_series(rng, 12);
    CHECK(shift(x, 0) == x);
    CHECK(shift(shift(x, 2), 3) == shift(x, 5));
    CHECK(shift(x, 13) == Series::zero(12));
    CHECK(mul_shifted(x, x, 4) == shift(mul(x, x), 4));
    CHECK(dilate(poly(6, {1, 2, 3}), 3) == poly(6, {1, 0, 0, 2, 0, 0, 3}));
}

TEST_CASE("invert")
{
    CHECK(invert(poly(3, {1, -1})) == poly(3, {1, 1, 1, 1}));
    CHECK(invert(Series::one(4)) == Series::one(4));
    CHECK(invert(poly(3, {-1, 1})) == poly(3, {-1, -1, -1, -1}));
    CHECK_THROWS_AS(invert(poly(3, {2, 1})), std::domain_error);
    CHECK_THROWS_AS(invert(poly(3, {0, 1})), std::domain_error);

    auto p = invert(pochhammer(PochSpec::of(1, 1), 50));
    for (std::int64_t n = 0; n <= 50; ++n) {
        CHECK(p[static_cast<std::size_t>(n)] == oracle::count_partitions(n, n));
    }
    CHECK(p[5] == 7);
}

TEST_CASE("in-place binomial factors")
{
    auto s = Series::one(6);
    s.times_binomial(1, 2);
    CHECK(s == poly(6, {1, 0, -1}));
    s.over_binomial(1, 2);
    CHECK(s == Series::one(6));
    s.times_binomial(-1, 3).over_binomial(-1, 3);
    CHECK(s == Series::one(6));
    CHECK_THROWS_AS(s.times_binomial(1, 0), std::invalid_argument);
}

TEST_CASE("pochhammer")
{
    SUBCASE("(q;q)_inf is the pentagonal theta series")
    {
        CHECK(pochhammer(PochSpec::of(1, 1), 12) == poly(12, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    }
    SUBCASE("sign is the sign of a")
    {
        CHECK(pochhammer(PochSpec::negated(1, 1, 1), 3) == poly(3, {1, 1}));
        CHECK(pochhammer(PochSpec::of(1, 1, 1), 3) == poly(3, {1, -1}));
    }
    SUBCASE("(q;q^2)_inf at order 4")
    {
        const auto expected = oracle::expand_factors({{1, 1}, {1, 3}});
        auto got = pochhammer(PochSpec::of(1, 2), 4);
        CHECK(oracle::to_poly(got) == expected);
        CHECK(got == poly(4, {1, -1, 0, -1, 1}));
    }
    SUBCASE("finite products equal repeated multiplication")
    {
        for (std::size_t c = 1; c <= 3; ++c) {
            for (std::size_t step = 1; step <= 3; ++step) {
                for (std::size_t len = 0; len <= 6; ++len) {
                    for (int sign : {1, -1}) {
                        auto product = Series::one(30);
                        for (std::size_t j = 0; j < len; ++j) {
                            auto factor = Series::one(30);
                            factor.add_term(c + step * j, -sign);
                            product = mul(product, factor);
                        }
                        const auto spec = sign > 0 ? PochSpec::of(c, step, len) : PochSpec::negated(c, step, len);
                        CHECK(pochhammer(spec, 30) == product);
                        CHECK(mul(pochhammer_inverse(spec, 30), product) == Series::one(30));
                    }
                }
            }
        }
    }
    SUBCASE("infinite truncation is exact")
    {
        // Adding factors beyond the order changes nothing.
        auto a = pochhammer(PochSpec::of(2, 3), 40);
        auto b = pochhammer(PochSpec::of(2, 3, 100), 40);
        CHECK(a == b);
    }
    CHECK_THROWS_AS(PochSpec::of(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(PochSpec::of(1, 0), std::invalid_argument);
}

TEST_CASE("gaussian binomial")
{
    CHECK(gaussian_binomial(2, 1, 1, 5) == poly(5, {1, 1}));
    CHECK(gaussian_binomial(4, 2, 1, 10) == poly(10, {1, 1, 2, 1, 1}));
    CHECK(gaussian_binomial(3, 5, 1, 10) == Series::zero(10));
    CHECK(gaussian_binomial(3, -1, 1, 10) == Series::zero(10));
    CHECK(gaussian_binomial(0, 0, 1, 3) == Series::one(3));

    SUBCASE("equals the quotient of Pochhammer polynomials")
    {
        for (int n = 0; n <= 9; ++n) {
            for (int k = 0; k <= n; ++k) {
                std::vector<std::pair<int, std::size_t>> num, den;
                for (int i = 1; i <= n; ++i) {
                    num.push_back({1, static_cast<std::size_t>(i)});
                }
                for (int i = 1; i <= k; ++i) {
                    den.push_back({1, static_cast<std::size_t>(i)});
                }
                for (int i = 1; i <= n - k; ++i) {
                    den.push_back({1, static_cast<std::size_t>(i)});
                }
                auto quotient = oracle::exact_divide(oracle::expand_factors(num), oracle::expand_factors(den));
                const std::size_t degree = static_cast<std::size_t>(k * (n - k));
                quotient.resize(degree + 1);
                CHECK(oracle::to_poly(gaussian_binomial(n, k, 1, degree)) == quotient);
            }
        }
    }
    SUBCASE("step dilates")
    {
        CHECK(gaussian_binomial(5, 2, 3, 40) == dilate(gaussian_binomial(5, 2, 1, 40), 3));
    }
    SUBCASE("column agrees with single evaluations")
    {
        auto col = gaussian_binomial_column(3, 10, 2, 60);
        REQUIRE(col.size() == 11);
        for (int n = 0; n <= 10; ++n) {
            CHECK(col[static_cast<std::size_t>(n)] == gaussian_binomial(n, 3, 2, 60));
        }
    }
}

TEST_CASE("theta_truncated")
{
    CHECK(theta_truncated(ThetaKind::pentagonal_2k, 1, 5) == poly(5, {1, -1}));
    CHECK(theta_truncated(ThetaKind::square_k, 1, 4, 2) == poly(4, {1, 0, -2}));
    CHECK(theta_truncated(ThetaKind::triangular_2k, 2, 8) == poly(8, {1, -1, 0, -1, 0, 0, 1}));
    CHECK(theta_truncated(ThetaKind::square_k, 2, 6) == poly(6, {1, -2, 0, 0, 2}));
    CHECK_THROWS_AS(theta_truncated(ThetaKind::square_k, 0, 4), std::invalid_argument);

    // Enough terms reproduce Euler's product.
    CHECK(theta_truncated(ThetaKind::pentagonal_2k, 10, 100) == pochhammer(PochSpec::of(1, 1), 100));
}

TEST_CASE("rendering")
{
    CHECK(to_string(poly(5, {1, -1, -2, 0, 0, 3})) == "1 - q - 2*q^2 + 3*q^5 + O(q^6)");
    CHECK(to_string(Series::zero(2)) == "0 + O(q^3)");
    CHECK(to_string(poly(2, {0, -1})) == "-q + O(q^3)");
}
