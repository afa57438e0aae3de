#pragma once

// Integer partitions, cycle indices of symmetric groups, and Polya substitution.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "minwin/series.hpp"

namespace minwin {

/// A partition of t stored as cycle-type multiplicities: j[k-1] parts of size k.
struct IntegerPartition {
    std::vector<unsigned> multiplicities;

    /// The integer being partitioned, sum of k * j_k.
    std::size_t total() const {
        std::size_t t = 0;
        for (std::size_t k = 1; k <= multiplicities.size(); ++k) {
            t += k * multiplicities[k - 1];
        }
        return t;
    }

    unsigned j(std::size_t k) const { return k >= 1 && k <= multiplicities.size() ? multiplicities[k - 1] : 0; }

    friend auto operator<=>(const IntegerPartition&, const IntegerPartition&) = default;
};

/// Every multiplicity vector (j_1..j_t) with sum k*j_k = t, each of length t,
/// in lexicographic order of the vector.
inline std::vector<IntegerPartition> partitions(std::size_t t) {
    std::vector<IntegerPartition> out;
    std::vector<unsigned> j(t, 0);
    // Fill j_t, j_{t-1}, ..., j_1 from the largest part down; the innermost
    // choice (j_1) is forced by the remaining sum.
    auto rec = [&](auto& self, std::size_t k, std::size_t remaining) -> void {
        if (k == 1) {
            j[0] = static_cast<unsigned>(remaining);
            out.push_back(IntegerPartition{j});
            return;
        }
        for (std::size_t c = 0; c * k <= remaining; ++c) {
            j[k - 1] = static_cast<unsigned>(c);
            self(self, k - 1, remaining - c * k);
        }
        j[k - 1] = 0;
    };
    if (t == 0) {
        out.push_back(IntegerPartition{});
    } else {
        rec(rec, t, t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Z(S_t) as a map from cycle type to its (positive, rational) coefficient.
struct CycleIndex {
    std::size_t degree = 0;
    std::map<IntegerPartition, Rational> terms;

    Rational coefficient_sum() const {
        Rational s = 0;
        for (const auto& [p, c] : terms) {
            s += c;
        }
        return s;
    }

    friend bool operator==(const CycleIndex&, const CycleIndex&) = default;
};

namespace detail {

inline IntegerPartition padded(const IntegerPartition& p, std::size_t t) {
    IntegerPartition q = p;
    q.multiplicities.resize(t, 0);
    return q;
}

class CycleIndexMemo {
public:
    const CycleIndex& get(std::size_t t) {
        std::lock_guard lock(mutex_);
        while (table_.size() <= t) {
            table_.push_back(std::make_unique<CycleIndex>(next()));
        }
        return *table_[t];
    }

private:
    // Z(S_t) = (1/t) * sum_{k=1..t} a_k * Z(S_{t-k}), Z(S_0) = 1.
    CycleIndex next() const {
        const std::size_t t = table_.size();
        CycleIndex z;
        z.degree = t;
        if (t == 0) {
            z.terms.emplace(IntegerPartition{}, Rational(1));
            return z;
        }
        for (std::size_t k = 1; k <= t; ++k) {
            for (const auto& [p, c] : table_[t - k]->terms) {
                IntegerPartition q = padded(p, t);
                q.multiplicities[k - 1] += 1;
                z.terms[q] += c / static_cast<long long>(t);
            }
        }
        return z;
    }

    std::mutex mutex_;
    std::vector<std::unique_ptr<CycleIndex>> table_;
};

inline CycleIndexMemo& cycle_index_memo() {
    static CycleIndexMemo memo;
    return memo;
}

} // namespace detail

/// Cycle index of the symmetric group S_t, built by the standard recursion and memoized.
inline CycleIndex cycle_index_symmetric(std::size_t t) { return detail::cycle_index_memo().get(t); }

/// Z(base(x), base(x^2), base(x^3), ...): each a_k^{j_k} becomes base(x^k)^{j_k};
/// factors with j_k = 0 are skipped.
inline TruncatedSeries substitute_series(const CycleIndex& z, const TruncatedSeries& base) {
    const std::size_t order = base.order();
    TruncatedSeries result(order);
    std::vector<TruncatedSeries> substituted;
    for (std::size_t k = 1; k <= z.degree; ++k) {
        substituted.push_back(power_substitute(base, k));
    }
    for (const auto& [p, c] : z.terms) {
        TruncatedSeries term = TruncatedSeries::one(order);
        for (std::size_t k = 1; k <= p.multiplicities.size(); ++k) {
            if (p.j(k) != 0) {
                term = multiply(term, power(substituted[k - 1], p.j(k)));
            }
        }
        term *= c;
        result += term;
    }
    return result;
}

} // namespace minwin
