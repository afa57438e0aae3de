#pragma once

// Exact truncated formal power series over Q.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "minwin/errors.hpp"

namespace minwin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Returns the value of r as an integer, throwing consistency_error if r is not integral.
inline BigInt to_integer(const Rational& r, const char* what = "value") {
    if (boost::multiprecision::denominator(r) != 1) {
        throw consistency_error(std::string(what) + " is not an integer: " + r.str());
    }
    return boost::multiprecision::numerator(r);
}

/// Power series a_0 + a_1 x + ... + a_N x^N with everything above x^N discarded.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}

    /// Builds a series from explicit coefficients; the order is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw usage_error("a truncated series needs at least one coefficient");
        }
    }

    /// The multiplicative identity 1 + 0x + 0x^2 + ...
    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
    Rational& operator[](std::size_t i) { return coeffs_.at(i); }

    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    /// Coefficient i as an exact integer; throws consistency_error if it is fractional.
    BigInt integer_coeff(std::size_t i) const { return to_integer(coeffs_.at(i), "series coefficient"); }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        require_same_order(other);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            coeffs_[i] += other.coeffs_[i];
        }
        return *this;
    }

    TruncatedSeries& operator*=(const Rational& c) {
        for (auto& a : coeffs_) {
            a *= c;
        }
        return *this;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    void require_same_order(const TruncatedSeries& other) const {
        if (other.order() != order()) {
            throw usage_error("series order mismatch: " + std::to_string(order()) + " vs " +
                              std::to_string(other.order()));
        }
    }

private:
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a += b;
    return a;
}

inline TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
    a *= c;
    return a;
}

/// g(x) = x^2 / (1 - x)^2, i.e. coefficients 0, 0, 1, 2, 3, ...
inline TruncatedSeries make_g(std::size_t order) {
    TruncatedSeries g(order);
    for (std::size_t n = 2; n <= order; ++n) {
        g[n] = static_cast<long long>(n - 1);
    }
    return g;
}

/// Cauchy product truncated at the common order.
inline TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_same_order(b);
    const std::size_t order = a.order();
    TruncatedSeries c(order);
    for (std::size_t i = 0; i <= order; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (b[j] != 0) {
                c[i + j] += a[i] * b[j];
            }
        }
    }
    return c;
}

/// s^b by repeated squaring; power(s, 0) is the identity series.
inline TruncatedSeries power(const TruncatedSeries& s, unsigned b) {
    TruncatedSeries result = TruncatedSeries::one(s.order());
    TruncatedSeries base = s;
    while (b != 0) {
        if (b & 1U) {
            result = multiply(result, base);
        }
        b >>= 1U;
        if (b != 0) {
            base = multiply(base, base);
        }
    }
    return result;
}

/// s(x^a): the coefficient at n is s_{n/a} when a divides n and 0 otherwise.
inline TruncatedSeries power_substitute(const TruncatedSeries& s, std::size_t a) {
    if (a == 0) {
        throw usage_error("power_substitute needs a positive exponent");
    }
    TruncatedSeries out(s.order());
    for (std::size_t n = 0; n <= s.order(); n += a) {
        out[n] = s[n / a];
    }
    return out;
}

/// One (1 - x^k)^e factor of a rational generating function's denominator.
struct DenominatorFactor {
    std::size_t k;
    unsigned e;
};

/// Expands numerator / prod (1 - x^k)^e up to x^order.
///
/// Each factor is applied as e successive multiplications by the geometric
/// series 1 + x^k + x^{2k} + ..., which is the same as a running prefix sum
/// with stride k.
inline TruncatedSeries expand_rational(std::span<const BigInt> numerator,
                                       std::span<const DenominatorFactor> denominator_factors,
                                       std::size_t order) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < numerator.size() && i <= order; ++i) {
        s[i] = Rational(numerator[i]);
    }
    for (const auto& f : denominator_factors) {
        if (f.k == 0) {
            throw usage_error("denominator factor (1 - x^0) is not invertible");
        }
        for (unsigned rep = 0; rep < f.e; ++rep) {
            for (std::size_t n = f.k; n <= order; ++n) {
                s[n] += s[n - f.k];
            }
        }
    }
    return s;
}

} // namespace minwin
