#pragma once

// Proper representations: one canonical (class sizes, minimal winning vector)
// pair per isomorphism class of games with minimum.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "minwin/errors.hpp"
#include "minwin/games.hpp"

namespace minwin {

enum class Violation {
    shape,                 // lengths differ, no classes, or an empty class
    class_order,           // class sizes not non-increasing
    minwin_range,          // some m_i > n_i
    block_order,           // m not lexicographically maximal within a block of equal class sizes
    zero_minwin,           // m = 0, so the empty coalition would win
    multiple_null_classes, // two classes with m_i = 0 would merge
    multiple_veto_classes, // two classes with m_i = n_i would merge
};

inline const char* to_string(Violation v) {
    switch (v) {
    case Violation::shape:
        return "shape";
    case Violation::class_order:
        return "class_order";
    case Violation::minwin_range:
        return "minwin_range";
    case Violation::block_order:
        return "block_order";
    case Violation::zero_minwin:
        return "zero_minwin";
    case Violation::multiple_null_classes:
        return "multiple_null_classes";
    case Violation::multiple_veto_classes:
        return "multiple_veto_classes";
    }
    return "?";
}

struct ProperCheck {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(Violation v) const { return std::find(violations.begin(), violations.end(), v) != violations.end(); }
};

/// Reports every rule spec breaks; an empty list means spec is a proper representation.
inline ProperCheck is_proper(const GameSpec& spec) {
    ProperCheck out;
    auto flag = [&](Violation v) {
        if (!out.has(v)) {
            out.violations.push_back(v);
        }
    };
    const auto& n = spec.classes;
    const auto& m = spec.minwin;
    if (n.empty() || n.size() != m.size() || std::find(n.begin(), n.end(), 0U) != n.end()) {
        flag(Violation::shape);
        return out;
    }
    const std::size_t t = n.size();
    for (std::size_t i = 1; i < t; ++i) {
        if (n[i - 1] < n[i]) {
            flag(Violation::class_order);
        }
    }
    std::size_t nulls = 0;
    std::size_t vetoes = 0;
    for (std::size_t i = 0; i < t; ++i) {
        if (m[i] > n[i]) {
            flag(Violation::minwin_range);
        }
        nulls += m[i] == 0;
        vetoes += m[i] == n[i];
        if (i > 0 && n[i - 1] == n[i] && m[i - 1] < m[i]) {
            flag(Violation::block_order);
        }
    }
    if (nulls == t) {
        flag(Violation::zero_minwin);
    }
    if (nulls > 1) {
        flag(Violation::multiple_null_classes);
    }
    if (vetoes > 1) {
        flag(Violation::multiple_veto_classes);
    }
    return out;
}

inline std::string describe(const ProperCheck& check) {
    std::string s;
    for (Violation v : check.violations) {
        s += (s.empty() ? "" : ", ") + std::string(to_string(v));
    }
    return s.empty() ? "ok" : s;
}

/// A GameSpec known to satisfy every is_proper rule.
class ProperRepresentation {
public:
    /// Throws validation_error listing the violated rules if spec is not proper.
    explicit ProperRepresentation(GameSpec spec) : spec_(std::move(spec)) {
        const auto check = is_proper(spec_);
        if (!check.ok()) {
            throw validation_error(to_string(spec_) + " is not a proper representation: " + describe(check));
        }
    }

    const GameSpec& spec() const noexcept { return spec_; }
    const std::vector<unsigned>& classes() const noexcept { return spec_.classes; }
    const std::vector<unsigned>& minwin() const noexcept { return spec_.minwin; }
    std::size_t class_count() const noexcept { return spec_.class_count(); }
    std::size_t player_count() const { return spec_.player_count(); }

    friend auto operator<=>(const ProperRepresentation&, const ProperRepresentation&) = default;

private:
    GameSpec spec_;
};

/// Sorts the (n_i, m_i) columns into non-increasing lexicographic order.
/// Requires 0 <= m_i <= n_i, m != 0 and at most one null and one veto class.
inline ProperRepresentation canonicalize(const GameSpec& spec) {
    validate_game_spec(spec);
    const auto pre = is_proper(spec);
    for (Violation v : {Violation::multiple_null_classes, Violation::multiple_veto_classes}) {
        if (pre.has(v)) {
            throw validation_error(to_string(spec) + " cannot be canonicalized: " + to_string(v));
        }
    }
    std::vector<std::pair<unsigned, unsigned>> columns;
    for (std::size_t i = 0; i < spec.class_count(); ++i) {
        columns.emplace_back(spec.classes[i], spec.minwin[i]);
    }
    std::sort(columns.begin(), columns.end(), std::greater<>{});
    GameSpec out;
    for (const auto& [n, m] : columns) {
        out.classes.push_back(n);
        out.minwin.push_back(m);
    }
    return ProperRepresentation(std::move(out));
}

/// Partitions of n into exactly t positive parts, each non-increasing,
/// in reverse lexicographic order.
inline std::vector<std::vector<unsigned>> partitions_into(std::size_t n, std::size_t t) {
    std::vector<std::vector<unsigned>> out;
    if (t == 0) {
        if (n == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<unsigned> parts;
    auto rec = [&](auto& self, std::size_t remaining, std::size_t slots, std::size_t cap) -> void {
        if (slots == 0) {
            if (remaining == 0) {
                out.push_back(parts);
            }
            return;
        }
        // Every remaining slot needs at least one player.
        const std::size_t hi = std::min(cap, remaining - (slots - 1));
        for (std::size_t p = hi; p >= 1; --p) {
            if (p * slots < remaining) {
                break;
            }
            parts.push_back(static_cast<unsigned>(p));
            self(self, remaining - p, slots - 1, p);
            parts.pop_back();
        }
    };
    if (n >= t) {
        rec(rec, n, t, n);
    }
    return out;
}

/// All proper representations with n players and t classes.
///
/// allow_null / allow_veto switch classes with m_i = 0 / m_i = n_i on or off.
/// Output order: class-size partitions in reverse lexicographic order, then
/// minimal winning vectors in reverse lexicographic order.
inline std::vector<ProperRepresentation> enumerate_proper(std::size_t n, std::size_t t, bool allow_null,
                                                          bool allow_veto) {
    std::vector<ProperRepresentation> out;
    for (const auto& classes : partitions_into(n, t)) {
        std::vector<unsigned> m(t, 0);
        auto rec = [&](auto& self, std::size_t i, std::size_t nulls, std::size_t vetoes) -> void {
            if (i == t) {
                if (nulls < t) {
                    out.emplace_back(GameSpec{classes, m});
                }
                return;
            }
            const unsigned lo = allow_null ? 0U : 1U;
            unsigned hi = allow_veto ? classes[i] : classes[i] - 1;
            if (i > 0 && classes[i] == classes[i - 1]) {
                hi = std::min(hi, m[i - 1]);
            }
            for (unsigned v = hi + 1; v-- > lo;) {
                const bool is_null = v == 0;
                const bool is_veto = v == classes[i];
                if ((is_null && nulls > 0) || (is_veto && vetoes > 0)) {
                    continue;
                }
                m[i] = v;
                self(self, i + 1, nulls + is_null, vetoes + is_veto);
            }
        };
        rec(rec, 0, 0, 0);
    }
    return out;
}

} // namespace minwin
