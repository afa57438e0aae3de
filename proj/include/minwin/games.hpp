#pragma once

// Explicit games with minimum: a game is given by class sizes n_1..n_t and a
// single minimal winning vector m_1..m_t; a coalition wins iff it contains at
// least m_i players of every class i.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minwin/errors.hpp"

namespace minwin {

/// Per-class membership counts of a coalition.
using CoalitionVector = std::vector<unsigned>;

/// Coalitions over at most 64 labeled players, bit i = player i.
using Coalition = std::uint64_t;

/// Default player bound for routines that loop over all 2^n coalitions.
inline constexpr std::size_t default_brute_bound = 16;

/// Class sizes and the minimal winning vector of a game with minimum.
struct GameSpec {
    std::vector<unsigned> classes;
    std::vector<unsigned> minwin;

    std::size_t class_count() const noexcept { return classes.size(); }

    std::size_t player_count() const { return std::accumulate(classes.begin(), classes.end(), std::size_t{0}); }

    friend auto operator<=>(const GameSpec&, const GameSpec&) = default;
};

inline std::string to_string(const std::vector<unsigned>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const GameSpec& spec) {
    return "(" + to_string(spec.classes) + "," + to_string(spec.minwin) + ")";
}

/// Throws validation_error unless spec describes a game: matching lengths,
/// positive class sizes, 0 <= m_i <= n_i, and m not identically zero.
inline void validate_game_spec(const GameSpec& spec) {
    if (spec.classes.empty()) {
        throw validation_error("game spec has no classes");
    }
    if (spec.classes.size() != spec.minwin.size()) {
        throw validation_error("classes and minwin differ in length");
    }
    for (std::size_t i = 0; i < spec.classes.size(); ++i) {
        if (spec.classes[i] == 0) {
            throw validation_error("class " + std::to_string(i + 1) + " is empty");
        }
        if (spec.minwin[i] > spec.classes[i]) {
            throw validation_error("minwin exceeds class size in class " + std::to_string(i + 1));
        }
    }
    if (std::all_of(spec.minwin.begin(), spec.minwin.end(), [](unsigned m) { return m == 0; })) {
        throw validation_error("minwin is the zero vector, so the empty coalition would win");
    }
}

/// Calls fn on every vector s with 0 <= s_i <= bounds_i, in lexicographic order.
inline void for_each_vector(std::span<const unsigned> bounds, const std::function<void(const CoalitionVector&)>& fn) {
    CoalitionVector s(bounds.size(), 0);
    while (true) {
        fn(s);
        std::size_t i = s.size();
        while (i > 0) {
            --i;
            if (s[i] < bounds[i]) {
                ++s[i];
                std::fill(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end(), 0U);
                break;
            }
            if (i == 0) {
                return;
            }
        }
        if (s.empty()) {
            return;
        }
    }
}

/// s wins iff s_i >= m_i for every class.
inline bool is_winning_vector(const GameSpec& spec, std::span<const unsigned> s) {
    if (s.size() != spec.class_count()) {
        throw usage_error("coalition vector has " + std::to_string(s.size()) + " entries, game has " +
                          std::to_string(spec.class_count()) + " classes");
    }
    bool wins = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] > spec.classes[i]) {
            throw usage_error("coalition vector entry " + std::to_string(i + 1) + " exceeds its class size");
        }
        wins = wins && s[i] >= spec.minwin[i];
    }
    return wins;
}

/// Minimal winning vectors found by scanning the whole vector lattice: a
/// winning vector is minimal when every single-coordinate decrement loses.
inline std::set<CoalitionVector> minimal_winning_vectors(const GameSpec& spec) {
    std::set<CoalitionVector> out;
    for_each_vector(spec.classes, [&](const CoalitionVector& s) {
        if (!is_winning_vector(spec, s)) {
            return;
        }
        CoalitionVector d = s;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (d[i] == 0) {
                continue;
            }
            --d[i];
            const bool still_wins = is_winning_vector(spec, d);
            ++d[i];
            if (still_wins) {
                return;
            }
        }
        out.insert(s);
    });
    return out;
}

/// Maximal losing vectors, closed form: for each class with m_i >= 1, fill
/// every other class and take m_i - 1 players of class i.
inline std::set<CoalitionVector> maximal_losing_vectors(const GameSpec& spec) {
    std::set<CoalitionVector> out;
    for (std::size_t i = 0; i < spec.class_count(); ++i) {
        if (spec.minwin[i] == 0) {
            continue;
        }
        CoalitionVector l(spec.classes.begin(), spec.classes.end());
        l[i] = spec.minwin[i] - 1;
        out.insert(l);
    }
    return out;
}

/// Maximal losing vectors by lattice scan, for cross-checking the closed form.
inline std::set<CoalitionVector> maximal_losing_vectors_brute(const GameSpec& spec) {
    std::set<CoalitionVector> out;
    for_each_vector(spec.classes, [&](const CoalitionVector& s) {
        if (is_winning_vector(spec, s)) {
            return;
        }
        CoalitionVector u = s;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i] == spec.classes[i]) {
                continue;
            }
            ++u[i];
            const bool wins = is_winning_vector(spec, u);
            --u[i];
            if (!wins) {
                return;
            }
        }
        out.insert(s);
    });
    return out;
}

/// Class indices (0-based) with m_i = 0.
inline std::vector<std::size_t> null_classes(const GameSpec& spec) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spec.class_count(); ++i) {
        if (spec.minwin[i] == 0) {
            out.push_back(i);
        }
    }
    return out;
}

/// Class indices (0-based) with m_i = n_i.
inline std::vector<std::size_t> veto_classes(const GameSpec& spec) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spec.class_count(); ++i) {
        if (spec.minwin[i] == spec.classes[i]) {
            out.push_back(i);
        }
    }
    return out;
}

inline void require_brute_bound(std::size_t players, std::size_t bound) {
    if (players > bound) {
        throw capacity_error("exhaustive check over 2^" + std::to_string(players) +
                             " coalitions exceeds the configured bound of " + std::to_string(bound) + " players");
    }
}

/// A game with minimum realized on labeled players 0..n-1.
class ExplicitGame {
public:
    /// Canonical realization: class 0 gets players 0..n_1-1, class 1 the next n_2, and so on.
    explicit ExplicitGame(GameSpec spec) : spec_(std::move(spec)) {
        validate_game_spec(spec_);
        for (std::size_t c = 0; c < spec_.class_count(); ++c) {
            class_of_.insert(class_of_.end(), spec_.classes[c], c);
        }
        build_masks();
    }

    /// Realization with an arbitrary player-to-class assignment.
    ExplicitGame(GameSpec spec, std::vector<std::size_t> class_of)
        : spec_(std::move(spec)), class_of_(std::move(class_of)) {
        validate_game_spec(spec_);
        std::vector<unsigned> sizes(spec_.class_count(), 0);
        for (std::size_t c : class_of_) {
            if (c >= sizes.size()) {
                throw usage_error("class assignment refers to class " + std::to_string(c + 1) + " which does not exist");
            }
            ++sizes[c];
        }
        if (sizes != spec_.classes) {
            throw usage_error("class assignment sizes " + to_string(sizes) + " differ from " + to_string(spec_.classes));
        }
        build_masks();
    }

    const GameSpec& spec() const noexcept { return spec_; }
    std::size_t player_count() const noexcept { return class_of_.size(); }
    std::size_t class_of(std::size_t player) const { return class_of_.at(player); }
    std::span<const std::size_t> assignment() const noexcept { return class_of_; }
    Coalition class_mask(std::size_t c) const { return class_masks_.at(c); }
    Coalition grand_coalition() const noexcept {
        return player_count() == 64 ? ~Coalition{0} : (Coalition{1} << player_count()) - 1;
    }

    CoalitionVector vector_of(Coalition s) const {
        CoalitionVector v(class_masks_.size());
        for (std::size_t c = 0; c < v.size(); ++c) {
            v[c] = static_cast<unsigned>(std::popcount(s & class_masks_[c]));
        }
        return v;
    }

    bool is_winning(Coalition s) const {
        for (std::size_t c = 0; c < class_masks_.size(); ++c) {
            if (static_cast<unsigned>(std::popcount(s & class_masks_[c])) < spec_.minwin[c]) {
                return false;
            }
        }
        return true;
    }

    /// The coalition formed by the lowest-indexed s_c players of every class c.
    Coalition canonical_coalition(std::span<const unsigned> s) const {
        if (s.size() != spec_.class_count()) {
            throw usage_error("coalition vector length does not match the class count");
        }
        Coalition out = 0;
        for (std::size_t c = 0; c < s.size(); ++c) {
            Coalition members = class_masks_[c];
            for (unsigned k = 0; k < s[c]; ++k) {
                if (members == 0) {
                    throw usage_error("coalition vector entry exceeds its class size");
                }
                const Coalition lowest = members & (~members + 1);
                out |= lowest;
                members ^= lowest;
            }
        }
        return out;
    }

private:
    void build_masks() {
        if (class_of_.size() > 64) {
            throw capacity_error("explicit games are limited to 64 players");
        }
        class_masks_.assign(spec_.class_count(), 0);
        for (std::size_t p = 0; p < class_of_.size(); ++p) {
            class_masks_[class_of_[p]] |= Coalition{1} << p;
        }
    }

    GameSpec spec_;
    std::vector<std::size_t> class_of_;
    std::vector<Coalition> class_masks_;
};

enum class Desirability { more, less, equal, incomparable };

inline const char* to_string(Desirability d) {
    switch (d) {
    case Desirability::more:
        return "more";
    case Desirability::less:
        return "less";
    case Desirability::equal:
        return "equal";
    case Desirability::incomparable:
        return "incomparable";
    }
    return "?";
}

/// a is at least as desirable as b: every winning coalition containing b but
/// not a still wins after b is replaced by a.
inline bool at_least_as_desirable(const ExplicitGame& game, std::size_t a, std::size_t b,
                                  std::size_t bound = default_brute_bound) {
    require_brute_bound(game.player_count(), bound);
    const Coalition bit_a = Coalition{1} << a;
    const Coalition bit_b = Coalition{1} << b;
    const Coalition others = game.grand_coalition() & ~bit_a & ~bit_b;
    // Enumerate subsets of the other players, then add b.
    Coalition rest = 0;
    do {
        const Coalition s = rest | bit_b;
        if (game.is_winning(s) && !game.is_winning(rest | bit_a)) {
            return false;
        }
        rest = (rest - others) & others;
    } while (rest != 0);
    return true;
}

/// Four-way Isbell desirability verdict for a relative to b.
inline Desirability desirability_compare(const ExplicitGame& game, std::size_t a, std::size_t b,
                                         std::size_t bound = default_brute_bound) {
    if (a == b) {
        throw usage_error("desirability_compare needs two distinct players");
    }
    if (a >= game.player_count() || b >= game.player_count()) {
        throw usage_error("player index out of range");
    }
    const bool ab = at_least_as_desirable(game, a, b, bound);
    const bool ba = at_least_as_desirable(game, b, a, bound);
    if (ab && ba) {
        return Desirability::equal;
    }
    if (ab) {
        return Desirability::more;
    }
    if (ba) {
        return Desirability::less;
    }
    return Desirability::incomparable;
}

/// Equi-desirability classes as sorted player lists, ordered by their first player.
inline std::vector<std::vector<std::size_t>> equivalence_classes(const ExplicitGame& game,
                                                                 std::size_t bound = default_brute_bound) {
    require_brute_bound(game.player_count(), bound);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t p = 0; p < game.player_count(); ++p) {
        auto it = std::find_if(blocks.begin(), blocks.end(), [&](const auto& block) {
            return desirability_compare(game, block.front(), p, bound) == Desirability::equal;
        });
        if (it == blocks.end()) {
            blocks.push_back({p});
        } else {
            it->push_back(p);
        }
    }
    return blocks;
}

/// Weighted game [quota; w_0, ..., w_{n-1}]: a coalition wins iff its weight reaches the quota.
struct WeightedGame {
    std::vector<long long> weights;
    long long quota = 1;

    bool accepts(Coalition s) const {
        long long w = 0;
        for (std::size_t p = 0; p < weights.size(); ++p) {
            if ((s >> p) & 1U) {
                w += weights[p];
            }
        }
        return w >= quota;
    }

    friend bool operator==(const WeightedGame&, const WeightedGame&) = default;
};

/// Throws validation_error unless weights are non-negative, quota positive and reachable.
inline void validate_weighted_game(const WeightedGame& g) {
    long long total = 0;
    for (long long w : g.weights) {
        if (w < 0) {
            throw validation_error("negative weight in weighted game");
        }
        total += w;
    }
    if (g.quota <= 0 || g.quota > total) {
        throw validation_error("weighted game quota must lie in 1..sum of weights");
    }
}

/// True when every part gives the same weight to all players of each class of game.
inline bool class_uniform(const ExplicitGame& game, std::span<const WeightedGame> parts) {
    for (const auto& part : parts) {
        std::vector<std::optional<long long>> seen(game.spec().class_count());
        for (std::size_t p = 0; p < game.player_count(); ++p) {
            auto& w = seen[game.class_of(p)];
            if (w && *w != part.weights[p]) {
                return false;
            }
            w = part.weights[p];
        }
    }
    return true;
}

namespace detail {

inline void require_part_sizes(const ExplicitGame& game, std::span<const WeightedGame> parts) {
    for (const auto& part : parts) {
        if (part.weights.size() != game.player_count()) {
            throw usage_error("weighted game is defined on " + std::to_string(part.weights.size()) +
                              " players, game has " + std::to_string(game.player_count()));
        }
    }
}

inline bool all_accept(std::span<const WeightedGame> parts, Coalition s) {
    return std::all_of(parts.begin(), parts.end(), [&](const WeightedGame& g) { return g.accepts(s); });
}

} // namespace detail

/// Intersection check over every one of the 2^n coalitions.
inline bool intersection_equals_exhaustive(const ExplicitGame& game, std::span<const WeightedGame> parts,
                                           std::size_t bound = default_brute_bound) {
    detail::require_part_sizes(game, parts);
    require_brute_bound(game.player_count(), bound);
    const Coalition all = game.grand_coalition();
    Coalition s = 0;
    do {
        if (game.is_winning(s) != detail::all_accept(parts, s)) {
            return false;
        }
        s = (s - all) & all;
    } while (s != 0);
    return true;
}

/// Whether the intersection of parts is exactly game. With class-uniform
/// weights only one coalition per coalition vector needs checking; otherwise
/// falls back to the exhaustive 2^n check.
inline bool intersection_equals(const ExplicitGame& game, std::span<const WeightedGame> parts,
                                std::size_t bound = default_brute_bound) {
    detail::require_part_sizes(game, parts);
    if (!class_uniform(game, parts)) {
        return intersection_equals_exhaustive(game, parts, bound);
    }
    bool equal = true;
    for_each_vector(game.spec().classes, [&](const CoalitionVector& s) {
        if (equal && is_winning_vector(game.spec(), s) != detail::all_accept(parts, game.canonical_coalition(s))) {
            equal = false;
        }
    });
    return equal;
}

} // namespace minwin
