#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "minwin/counting.hpp"
#include "minwin/series.hpp"

namespace minwin {
namespace {

std::vector<long long> as_ints(const TruncatedSeries& s) {
    std::vector<long long> out;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        out.push_back(s.integer_coeff(i).convert_to<long long>());
    }
    return out;
}

// Plain schoolbook convolution on machine integers, independent of multiply().
std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size(), 0);
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            c[n] += a[k] * b[n - k];
        }
    }
    return c;
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) {
        s[i] = Rational(num(rng), den(rng));
    }
    return s;
}

TEST(Series, MakeG) {
    EXPECT_EQ(as_ints(make_g(7)), (std::vector<long long>{0, 0, 1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(as_ints(make_g(0)), (std::vector<long long>{0}));
    EXPECT_EQ(as_ints(make_g(2)), (std::vector<long long>{0, 0, 1}));
}

TEST(Series, MultiplyMatchesHandConvolution) {
    const auto g = make_g(10);
    const auto gg = multiply(g, g);
    const auto expected = convolve(as_ints(g), as_ints(g));
    EXPECT_EQ(as_ints(gg), expected);
    EXPECT_EQ(gg[4], 1);
    EXPECT_EQ(gg[5], 4);
}

TEST(Series, OneIsNeutral) {
    std::mt19937 rng(7);
    const auto s = random_series(rng, 8);
    EXPECT_EQ(multiply(s, TruncatedSeries::one(8)), s);
    EXPECT_EQ(multiply(TruncatedSeries::one(8), s), s);
}

TEST(Series, OrderMismatchIsAnError) {
    EXPECT_THROW(multiply(make_g(4), make_g(5)), usage_error);
    auto a = make_g(3);
    EXPECT_THROW(a += make_g(4), usage_error);
}

TEST(Series, MultiplyIsCommutativeAndAssociative) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t order = trial % 9;
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order);
        EXPECT_EQ(multiply(a, b), multiply(b, a));
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    }
}

TEST(Series, Power) {
    const auto g = make_g(12);
    EXPECT_EQ(power(g, 0), TruncatedSeries::one(12));
    EXPECT_EQ(power(g, 2)[5], 4);

    // Compositions 9 = n1 + n2 + n3 weighted by (n1-1)(n2-1)(n3-1) choices of m.
    long long brute = 0;
    for (int a = 2; a <= 9; ++a) {
        for (int b = 2; a + b <= 9; ++b) {
            const int c = 9 - a - b;
            if (c >= 2) {
                brute += (a - 1) * (b - 1) * (c - 1);
            }
        }
    }
    EXPECT_EQ(brute, 56);
    EXPECT_EQ(power(g, 3)[9], brute);
}

TEST(Series, PowerIsRepeatedMultiply) {
    std::mt19937 rng(99);
    const auto s = random_series(rng, 6);
    TruncatedSeries acc = TruncatedSeries::one(6);
    for (unsigned b = 1; b <= 7; ++b) {
        acc = multiply(acc, s);
        EXPECT_EQ(power(s, b), acc) << "b=" << b;
        EXPECT_EQ(power(s, b), multiply(power(s, b - 1), s));
    }
}

TEST(Series, PowersOfGAreBinomials) {
    const std::size_t order = 30;
    const auto g = make_g(order);
    for (unsigned t = 0; t <= 8; ++t) {
        const auto gt = power(g, t);
        for (std::size_t n = 0; n <= order; ++n) {
            const BigInt expected = t == 0 ? BigInt(n == 0 ? 1 : 0) : labeled_count_nnnv(n, t);
            EXPECT_EQ(gt.integer_coeff(n), expected) << "t=" << t << " n=" << n;
        }
    }
}

TEST(Series, PowerSubstitute) {
    const auto g = make_g(12);
    EXPECT_EQ(power_substitute(g, 2)[6], 2);
    EXPECT_EQ(power_substitute(g, 1), g);
    EXPECT_EQ(power_substitute(g, 3)[7], 0);
    EXPECT_THROW(power_substitute(g, 0), usage_error);
}

TEST(Series, PowerSubstituteIsMultiplicative) {
    std::mt19937 rng(2024);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto a = random_series(rng, 12);
        const auto b = random_series(rng, 12);
        EXPECT_EQ(power_substitute(multiply(a, b), k), multiply(power_substitute(a, k), power_substitute(b, k)));
    }
}

TEST(Series, ExpandRational) {
    const std::vector<BigInt> one{1};
    const std::vector<DenominatorFactor> geometric{{1, 1}};
    const auto s = expand_rational(one, geometric, 15);
    for (std::size_t k = 0; k <= 15; ++k) {
        EXPECT_EQ(s[k], 1);
    }

    const auto f2 = *known_generating_function(2);
    EXPECT_EQ(expand_rational(f2.numerator, f2.denominator, 9)[9], 92);
    const auto f3 = *known_generating_function(3);
    EXPECT_EQ(expand_rational(f3.numerator, f3.denominator, 9)[9], 146);
}

TEST(Series, ExpandRationalAgreesWithPartialFractions) {
    // x^4/(2(1-x)^4) + x^4/(2(1-x^2)^2) + 2x^3/(1-x)^3 + x^2/(1-x)^2
    const std::size_t order = 30;
    const auto f2 = *known_generating_function(2);
    const auto direct = expand_rational(f2.numerator, f2.denominator, order);

    auto term = [&](std::vector<BigInt> num, std::vector<DenominatorFactor> den) {
        return expand_rational(num, den, order);
    };
    const auto sum = term({0, 0, 0, 0, 1}, {{1, 4}}) * Rational(1, 2) + term({0, 0, 0, 0, 1}, {{2, 2}}) * Rational(1, 2) +
                     term({0, 0, 0, 2}, {{1, 3}}) + term({0, 0, 1}, {{1, 2}});
    EXPECT_EQ(direct, sum);
}

TEST(Series, NonIntegerCoefficientIsReported) {
    TruncatedSeries s(1);
    s[1] = Rational(1, 2);
    EXPECT_THROW(s.integer_coeff(1), consistency_error);
}

} // namespace
} // namespace minwin
