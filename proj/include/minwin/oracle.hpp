#pragma once

// Brute-force recomputation of the counts. Nothing here calls the counting
// formulas or the catalog enumerator except cross_check, which compares them.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minwin/catalog.hpp"
#include "minwin/counting.hpp"
#include "minwin/errors.hpp"

namespace minwin {

struct OracleLimits {
    std::size_t labeled_max_n = 30;
    std::size_t labeled_max_t = 8;
    std::size_t naive_max_n = 20;
    std::size_t naive_max_t = 8;
    std::size_t isomorphism_max_n = 7;
};

namespace detail {

inline void require_capacity(const char* what, std::size_t value, std::size_t limit) {
    if (value > limit) {
        throw capacity_error(std::string(what) + " = " + std::to_string(value) + " exceeds the oracle limit " +
                             std::to_string(limit));
    }
}

// Ordered compositions of n into exactly t positive parts.
inline void for_each_composition(std::size_t n, std::size_t t, const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> parts;
    auto rec = [&](auto& self, std::size_t remaining, std::size_t slots) -> void {
        if (slots == 0) {
            if (remaining == 0) {
                fn(parts);
            }
            return;
        }
        for (std::size_t p = 1; p + (slots - 1) <= remaining; ++p) {
            parts.push_back(static_cast<unsigned>(p));
            self(self, remaining - p, slots - 1);
            parts.pop_back();
        }
    };
    if (t > 0) {
        rec(rec, n, t);
    } else if (n == 0) {
        fn(parts);
    }
}

} // namespace detail

/// Counts labeled pairs (n, m): ordered class sizes summing to n and
/// 1 <= m_i <= n_i - 1, one leaf per pair.
inline Count oracle_labeled(std::size_t n, std::size_t t, const OracleLimits& limits = {}) {
    detail::require_capacity("n", n, limits.labeled_max_n);
    detail::require_capacity("t", t, limits.labeled_max_t);
    std::uint64_t leaves = 0;
    auto rec = [&](auto& self, std::size_t remaining, std::size_t slots) -> void {
        if (slots == 0) {
            leaves += remaining == 0;
            return;
        }
        for (std::size_t size = 1; size + (slots - 1) <= remaining; ++size) {
            for (std::size_t m = 1; m + 1 <= size; ++m) {
                self(self, remaining - size, slots - 1);
            }
        }
    };
    rec(rec, n, t);
    return leaves;
}

/// Counts proper representations by filtering every candidate against the
/// literal symmetry condition: m must be lexicographically at least every
/// rearrangement of its columns that leaves the class sizes unchanged.
inline Count oracle_proper_naive(std::size_t n, std::size_t t, bool allow_null, bool allow_veto,
                                 const OracleLimits& limits = {}) {
    detail::require_capacity("n", n, limits.naive_max_n);
    detail::require_capacity("t", t, limits.naive_max_t);
    Count total = 0;
    std::vector<std::size_t> identity(t);
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    detail::for_each_composition(n, t, [&](const std::vector<unsigned>& classes) {
        if (!std::is_sorted(classes.begin(), classes.end(), std::greater<>{})) {
            return;
        }
        std::vector<std::vector<std::size_t>> stabilizer;
        std::vector<std::size_t> perm = identity;
        do {
            bool fixes = true;
            for (std::size_t i = 0; i < t && fixes; ++i) {
                fixes = classes[perm[i]] == classes[i];
            }
            if (fixes) {
                stabilizer.push_back(perm);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<unsigned> m(t, 0);
        std::vector<unsigned> permuted(t);
        auto rec = [&](auto& self, std::size_t i) -> void {
            if (i < t) {
                for (unsigned v = 0; v <= classes[i]; ++v) {
                    m[i] = v;
                    self(self, i + 1);
                }
                return;
            }
            std::size_t nulls = 0;
            std::size_t vetoes = 0;
            for (std::size_t k = 0; k < t; ++k) {
                nulls += m[k] == 0;
                vetoes += m[k] == classes[k];
            }
            if (nulls == t || nulls > 1 || vetoes > 1 || (!allow_null && nulls > 0) || (!allow_veto && vetoes > 0)) {
                return;
            }
            for (const auto& pi : stabilizer) {
                for (std::size_t k = 0; k < t; ++k) {
                    permuted[k] = m[pi[k]];
                }
                if (permuted > m) {
                    return;
                }
            }
            total += 1;
        };
        rec(rec, 0);
    });
    return total;
}

namespace detail {

// Winning families of games on at most 7 players, as a 128-bit set indexed by coalition.
using Family = std::array<std::uint64_t, 2>;

inline bool test_bit(const Family& f, std::size_t s) { return (f[s >> 6] >> (s & 63)) & 1U; }
inline void set_bit(Family& f, std::size_t s) { f[s >> 6] |= std::uint64_t{1} << (s & 63); }

inline bool family_less(const Family& x, const Family& y) {
    return x[1] != y[1] ? x[1] < y[1] : x[0] < y[0];
}

// Image of every coalition under every permutation of n players.
inline std::vector<std::vector<std::uint8_t>> permutation_images(std::size_t n) {
    std::vector<std::vector<std::uint8_t>> images;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    const std::size_t coalitions = std::size_t{1} << n;
    do {
        std::vector<std::uint8_t> img(coalitions);
        for (std::size_t s = 0; s < coalitions; ++s) {
            std::size_t out = 0;
            for (std::size_t p = 0; p < n; ++p) {
                if ((s >> p) & 1U) {
                    out |= std::size_t{1} << perm[p];
                }
            }
            img[s] = static_cast<std::uint8_t>(out);
        }
        images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return images;
}

inline Family apply(const Family& f, const std::vector<std::uint8_t>& img) {
    Family out{0, 0};
    for (std::size_t s = 0; s < img.size(); ++s) {
        if (test_bit(f, s)) {
            set_bit(out, img[s]);
        }
    }
    return out;
}

// Players a and b are equi-desirable iff swapping them maps the winning family onto itself.
inline std::size_t class_count_of_family(const Family& f, std::size_t n) {
    std::vector<std::size_t> rep(n);
    std::iota(rep.begin(), rep.end(), std::size_t{0});
    const std::size_t coalitions = std::size_t{1} << n;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (rep[b] != b) {
                continue;
            }
            bool symmetric = true;
            for (std::size_t s = 0; s < coalitions && symmetric; ++s) {
                const bool in_a = (s >> a) & 1U;
                const bool in_b = (s >> b) & 1U;
                std::size_t swapped = s;
                if (in_a != in_b) {
                    swapped ^= (std::size_t{1} << a) | (std::size_t{1} << b);
                }
                symmetric = test_bit(f, s) == test_bit(f, swapped);
            }
            if (symmetric) {
                rep[b] = rep[a];
            }
        }
    }
    std::set<std::size_t> roots(rep.begin(), rep.end());
    return roots.size();
}

} // namespace detail

/// Number of isomorphism classes of games with minimum on n labeled players,
/// keyed by their true number of equi-desirability classes.
///
/// Every ordered class-size composition and every minimal winning vector
/// 0 <= m <= n, m != 0 is realized as a winning family over all 2^n
/// coalitions; families are reduced to a canonical form by minimizing over
/// all n! relabelings of the players.
inline std::map<std::size_t, Count> oracle_isomorphism_count(std::size_t n, const OracleLimits& limits = {}) {
    detail::require_capacity("n", n, std::min<std::size_t>(limits.isomorphism_max_n, 7));
    std::map<std::size_t, Count> out;
    if (n == 0) {
        return out;
    }
    const std::size_t coalitions = std::size_t{1} << n;
    std::set<detail::Family, decltype(&detail::family_less)> raw(&detail::family_less);
    for (std::size_t t = 1; t <= n; ++t) {
        detail::for_each_composition(n, t, [&](const std::vector<unsigned>& classes) {
            std::vector<unsigned> m(t, 0);
            auto rec = [&](auto& self, std::size_t i) -> void {
                if (i < t) {
                    for (unsigned v = 0; v <= classes[i]; ++v) {
                        m[i] = v;
                        self(self, i + 1);
                    }
                    return;
                }
                if (std::all_of(m.begin(), m.end(), [](unsigned v) { return v == 0; })) {
                    return;
                }
                detail::Family f{0, 0};
                for (std::size_t s = 0; s < coalitions; ++s) {
                    std::size_t first = 0;
                    bool wins = true;
                    for (std::size_t c = 0; c < t && wins; ++c) {
                        const std::size_t mask = ((std::size_t{1} << classes[c]) - 1) << first;
                        wins = static_cast<unsigned>(std::popcount(s & mask)) >= m[c];
                        first += classes[c];
                    }
                    if (wins) {
                        detail::set_bit(f, s);
                    }
                }
                raw.insert(f);
            };
            rec(rec, 0);
        });
    }
    const auto images = detail::permutation_images(n);
    std::set<detail::Family, decltype(&detail::family_less)> canonical(&detail::family_less);
    for (const auto& f : raw) {
        detail::Family best = f;
        for (const auto& img : images) {
            const detail::Family g = detail::apply(f, img);
            if (detail::family_less(g, best)) {
                best = g;
            }
        }
        canonical.insert(best);
    }
    for (const auto& f : canonical) {
        out[detail::class_count_of_family(f, n)] += 1;
    }
    return out;
}

/// One oracle-versus-formula comparison.
struct CheckRow {
    std::string check;
    std::string method;
    std::size_t n = 0;
    std::optional<std::size_t> t;
    Count expected = 0;
    Count actual = 0;

    bool pass() const { return expected == actual; }
};

struct CrossCheckReport {
    std::size_t max_n = 0;
    std::vector<CheckRow> rows;

    bool success() const {
        return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass(); });
    }
};

/// Runs every oracle/formula comparison for 1 <= n <= max_n within limits.
///
/// Checks: labeled closed form vs composition oracle; nnnv and full counts by
/// Polya, recursion, catalog enumeration and the naive symmetry filter; the
/// rational generating functions for t = 2, 3, 4; the isomorphism oracle per t
/// and in total; totals.
inline CrossCheckReport cross_check(std::size_t max_n, const OracleLimits& limits = {}) {
    CrossCheckReport report;
    report.max_n = max_n;
    auto add = [&](std::string check, std::string method, std::size_t n, std::optional<std::size_t> t,
                   Count expected, Count actual) {
        report.rows.push_back({std::move(check), std::move(method), n, t, std::move(expected), std::move(actual)});
    };

    std::map<std::size_t, TruncatedSeries> gf;
    for (std::size_t t = 2; t <= 4 && max_n > 0; ++t) {
        const auto f = *known_generating_function(t);
        gf.emplace(t, expand_rational(f.numerator, f.denominator, max_n));
    }

    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n <= limits.labeled_max_n) {
            for (std::size_t t = 1; t <= std::min(limits.labeled_max_t, max_classes(n, false)); ++t) {
                add("labeled", "composition-oracle", n, t, labeled_count_nnnv(n, t), oracle_labeled(n, t, limits));
            }
        }

        for (std::size_t t = 1; t <= max_classes(n, false); ++t) {
            const Count polya = count_nnnv_polya(n, t);
            add("nnnv", "recursive", n, t, polya, count_nnnv_recursive(n, t));
            add("nnnv", "enumerate", n, t, polya, enumerate_proper(n, t, false, false).size());
            if (n <= limits.naive_max_n && t <= limits.naive_max_t) {
                add("nnnv", "naive", n, t, polya, oracle_proper_naive(n, t, false, false, limits));
            }
        }

        Count enumerated_total = 0;
        for (std::size_t t = 1; t <= max_classes(n, true); ++t) {
            const Count expected = count_all(n, t);
            const std::size_t listed = enumerate_proper(n, t, true, true).size();
            enumerated_total += listed;
            add("all", "polya", n, t, expected, count_all(n, t, CountMethod::polya));
            add("all", "enumerate", n, t, expected, listed);
            if (n <= limits.naive_max_n && t <= limits.naive_max_t) {
                add("all", "naive", n, t, expected, oracle_proper_naive(n, t, true, true, limits));
            }
        }
        add("total", "enumerate", n, std::nullopt, total_all(n), enumerated_total);

        for (const auto& [t, series] : gf) {
            add("gf", "rational-expansion", n, t, count_all(n, t), series.integer_coeff(n));
        }

        if (n <= std::min<std::size_t>(limits.isomorphism_max_n, 7)) {
            const auto iso = oracle_isomorphism_count(n, limits);
            Count iso_total = 0;
            for (std::size_t t = 1; t <= n; ++t) {
                const auto it = iso.find(t);
                const Count actual = it == iso.end() ? Count(0) : it->second;
                iso_total += actual;
                add("isomorphism", "canonical-form", n, t, count_all(n, t), actual);
            }
            add("isomorphism", "canonical-form", n, std::nullopt, total_all(n), iso_total);
        }
    }
    return report;
}

} // namespace minwin
