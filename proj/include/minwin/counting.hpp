#pragma once

// Counting formulas for games with minimum (one minimal winning vector).
//
// Notation: nnnv(n, t) is the number of non-isomorphic games with n players,
// t equi-desirability classes and neither null nor veto players. Games that
// may contain nulls and vetoes are obtained by attaching at most one null
// class and at most one veto class to such a game.

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minwin/polya.hpp"
#include "minwin/series.hpp"

namespace minwin {

using Count = BigInt;

/// Binomial coefficient C(n, k), zero outside 0 <= k <= n (including negative n).
inline BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Labeled solutions of 1 <= m_i <= n_i - 1, sum n_i = n: C(n-1, 2t-1).
inline Count labeled_count_nnnv(std::size_t n, std::size_t t) {
    return binomial(static_cast<long long>(n) - 1, 2 * static_cast<long long>(t) - 1);
}

/// Largest possible number of classes on n players.
inline std::size_t max_classes(std::size_t n, bool allow_null_veto) { return allow_null_veto ? n / 2 + 1 : n / 2; }

namespace detail {

// Integer coefficients of Z(S_t)(g(x), g(x^2), ...), recomputed at a larger
// order whenever a caller asks for a coefficient beyond the cached prefix.
class PolyaMemo {
public:
    Count get(std::size_t n, std::size_t t) {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find(t);
            if (it != table_.end() && n < it->second.size()) {
                return it->second[n];
            }
        }
        const std::size_t order = std::max<std::size_t>(2 * n, 32);
        const TruncatedSeries f = substitute_series(cycle_index_symmetric(t), make_g(order));
        std::vector<Count> coeffs;
        coeffs.reserve(order + 1);
        for (std::size_t i = 0; i <= order; ++i) {
            coeffs.push_back(f.integer_coeff(i));
        }
        Count value = coeffs[n];
        std::lock_guard lock(mutex_);
        auto& slot = table_[t];
        if (slot.size() < coeffs.size()) {
            slot = std::move(coeffs);
        }
        return value;
    }

private:
    std::mutex mutex_;
    std::map<std::size_t, std::vector<Count>> table_;
};

class RecursionMemo {
public:
    Count get(std::size_t n, std::size_t t) {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find({n, t});
            if (it != table_.end()) {
                return it->second;
            }
        }
        Count value = compute(n, t);
        std::lock_guard lock(mutex_);
        table_.emplace(std::pair{n, t}, value);
        return value;
    }

private:
    // nnnv(n, t) = (1/t) sum_{l=1..t} sum_{k=1..n} [l | k] (k/l - 1) nnnv(n-k, t-l)
    Count compute(std::size_t n, std::size_t t) {
        if (t == 0) {
            return n == 0 ? 1 : 0;
        }
        BigInt sum = 0;
        for (std::size_t l = 1; l <= t; ++l) {
            for (std::size_t k = l; k <= n; k += l) {
                const std::size_t weight = k / l - 1;
                if (weight != 0) {
                    sum += get(n - k, t - l) * weight;
                }
            }
        }
        if (sum % t != 0) {
            throw consistency_error("recursive count is not an integer at n=" + std::to_string(n) +
                                    ", t=" + std::to_string(t));
        }
        return sum / t;
    }

    std::mutex mutex_;
    std::map<std::pair<std::size_t, std::size_t>, Count> table_;
};

inline PolyaMemo& polya_memo() {
    static PolyaMemo memo;
    return memo;
}

inline RecursionMemo& recursion_memo() {
    static RecursionMemo memo;
    return memo;
}

} // namespace detail

/// nnnv(n, t) as the x^n coefficient of the Polya substitution Z(S_t)(g(x), g(x^2), ...).
inline Count count_nnnv_polya(std::size_t n, std::size_t t) { return detail::polya_memo().get(n, t); }

/// nnnv(n, t) via the convolution recursion over the last cycle of the symmetric group.
inline Count count_nnnv_recursive(std::size_t n, std::size_t t) { return detail::recursion_memo().get(n, t); }

enum class CountMethod { polya, recursive };

inline Count count_nnnv(std::size_t n, std::size_t t, CountMethod method = CountMethod::recursive) {
    return method == CountMethod::polya ? count_nnnv_polya(n, t) : count_nnnv_recursive(n, t);
}

/// Number of non-isomorphic games with minimum on n players and t classes,
/// nulls and vetoes allowed, composed from nnnv counts by the null/veto
/// class decomposition. Returns 0 for t = 0 and for t above max_classes.
inline Count count_all(std::size_t n, std::size_t t, CountMethod method = CountMethod::recursive) {
    if (t == 0 || n == 0) {
        return 0;
    }
    if (t == 1) {
        return n;
    }
    auto nnnv = [&](std::size_t nn, std::size_t tt) { return count_nnnv(nn, tt, method); };
    Count total = nnnv(n, t);
    Count one_special = 0;
    for (std::size_t i = 1; i + 2 <= n; ++i) {
        one_special += nnnv(n - i, t - 1);
    }
    total += 2 * one_special;
    if (t == 2) {
        total += n - 1;
    } else {
        for (std::size_t i = 2; i + 2 <= n; ++i) {
            total += (i - 1) * nnnv(n - i, t - 2);
        }
    }
    return total;
}

/// Generalisation of count_all to independent null/veto switches.
///
/// A null class takes i in 1..n-1 players (it cannot be everyone), a veto class
/// i in 1..n players, and a null+veto pair i >= 2 players split in i-1 ways.
/// count_restricted(n, t, true, true) coincides with count_all.
inline Count count_restricted(std::size_t n, std::size_t t, bool allow_null, bool allow_veto,
                              CountMethod method = CountMethod::recursive) {
    if (t == 0 || n == 0) {
        return 0;
    }
    auto nnnv = [&](std::size_t nn, std::size_t tt) { return count_nnnv(nn, tt, method); };
    Count total = nnnv(n, t);
    if (allow_null) {
        for (std::size_t i = 1; i < n; ++i) {
            total += nnnv(n - i, t - 1);
        }
    }
    if (allow_veto) {
        for (std::size_t i = 1; i <= n; ++i) {
            total += nnnv(n - i, t - 1);
        }
    }
    if (allow_null && allow_veto && t >= 2) {
        for (std::size_t i = 2; i <= n; ++i) {
            total += (i - 1) * nnnv(n - i, t - 2);
        }
    }
    return total;
}

/// Sum over t of nnnv(n, t).
inline Count total_nnnv(std::size_t n, CountMethod method = CountMethod::recursive) {
    Count s = 0;
    for (std::size_t t = 1; t <= max_classes(n, false); ++t) {
        s += count_nnnv(n, t, method);
    }
    return s;
}

/// Sum over t of count_all(n, t).
inline Count total_all(std::size_t n, CountMethod method = CountMethod::recursive) {
    Count s = 0;
    for (std::size_t t = 1; t <= max_classes(n, true); ++t) {
        s += count_all(n, t, method);
    }
    return s;
}

/// The rational generating functions of count_all(., t) for t = 2, 3, 4:
/// numerator coefficients (starting at x^0) and the (1 - x^k)^2 factors.
struct RationalGf {
    std::vector<BigInt> numerator;
    std::vector<DenominatorFactor> denominator;
};

inline std::optional<RationalGf> known_generating_function(std::size_t t) {
    auto shifted = [](std::size_t shift, std::vector<int> coeffs) {
        std::vector<BigInt> out(shift, 0);
        for (int c : coeffs) {
            out.emplace_back(c);
        }
        return out;
    };
    switch (t) {
    case 2:
        return RationalGf{shifted(2, {1, 2, 1, -2}), {{1, 2}, {2, 2}}};
    case 3:
        return RationalGf{shifted(4, {1, 4, 4, 2, -3, 0, -2}), {{1, 2}, {2, 2}, {3, 2}}};
    case 4:
        return RationalGf{shifted(6, {1, 4, 7, 8, 11, 6, 3, -2, -7, -6, 0, -2, 1}), {{1, 2}, {2, 2}, {3, 2}, {4, 2}}};
    default:
        return std::nullopt;
    }
}

} // namespace minwin
