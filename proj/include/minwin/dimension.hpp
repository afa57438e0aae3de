#pragma once

// Dimension of games with minimum, the weighted decomposition that attains
// it, and the pairwise trade witnesses that show no smaller decomposition
// exists.

#include <bit>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minwin/catalog.hpp"
#include "minwin/errors.hpp"
#include "minwin/games.hpp"

namespace minwin {

/// Two maximal losing coalitions of regular classes i and j together with the
/// players a (from class j) and b (from class i) whose swap turns both into
/// winning coalitions. Total weight is preserved by the swap, so no weighted
/// game containing every winning coalition can reject both losing ones.
struct LowerPair {
    std::size_t class_i = 0;
    std::size_t class_j = 0;
    Coalition losing_i = 0;
    Coalition losing_j = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    Coalition swapped_i = 0; // losing_i - a + b
    Coalition swapped_j = 0; // losing_j - b + a
};

struct DimensionCertificate {
    std::size_t value = 0;
    std::vector<WeightedGame> decomposition;
    std::vector<LowerPair> lower_pairs;
    /// Dropping any single part changes the intersection.
    bool minimal = false;
};

namespace detail {

// Classes that are neither null nor veto.
inline std::vector<std::size_t> regular_classes(const GameSpec& spec) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < spec.class_count(); ++i) {
        if (spec.minwin[i] != 0 && spec.minwin[i] != spec.classes[i]) {
            out.push_back(i);
        }
    }
    return out;
}

inline std::optional<std::size_t> veto_class(const GameSpec& spec) {
    const auto v = veto_classes(spec);
    return v.empty() ? std::nullopt : std::optional<std::size_t>(v.front());
}

} // namespace detail

/// t with neither nulls nor vetoes, t-1 with nulls only, max(t-1, 1) with
/// vetoes only, max(t-2, 1) with both.
inline std::size_t dimension_of(const ProperRepresentation& rep) {
    const std::size_t t = rep.class_count();
    const bool has_null = !null_classes(rep.spec()).empty();
    const bool has_veto = !veto_classes(rep.spec()).empty();
    if (has_null && has_veto) {
        return t > 3 ? t - 2 : 1;
    }
    if (has_veto) {
        return t > 2 ? t - 1 : 1;
    }
    return has_null ? t - 1 : t;
}

/// Weighted games whose intersection is the game, one per regular class.
///
/// Without a veto class, the part for class i gives weight 1 to N_i and has
/// quota m_i. With a veto class V the part for class i gives weight 1 to N_i,
/// weight w = n_i - m_i + 1 to N_V, and has quota w * n_V + m_i. If no regular class exists the single
/// part is the unanimity game on the veto class.
inline std::vector<WeightedGame> decompose(const ProperRepresentation& rep) {
    const GameSpec& spec = rep.spec();
    const ExplicitGame game(spec);
    const std::size_t n = game.player_count();
    const auto veto = detail::veto_class(spec);
    const auto regular = detail::regular_classes(spec);

    auto indicator = [&](std::initializer_list<std::size_t> cls) {
        std::vector<long long> w(n, 0);
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t c : cls) {
                if (game.class_of(p) == c) {
                    w[p] = 1;
                }
            }
        }
        return w;
    };

    std::vector<WeightedGame> parts;
    if (regular.empty()) {
        // Only a veto class (plus possibly a null class) remains.
        parts.push_back({indicator({*veto}), static_cast<long long>(spec.classes[*veto])});
        return parts;
    }
    for (std::size_t i : regular) {
        if (veto) {
            // Veto players outweigh all the slack n_i - m_i, so no coalition missing one reaches the quota.
            const long long w = static_cast<long long>(spec.classes[i] - spec.minwin[i]) + 1;
            auto weights = indicator({i});
            for (std::size_t p = 0; p < n; ++p) {
                if (game.class_of(p) == *veto) {
                    weights[p] = w;
                }
            }
            parts.push_back({std::move(weights), w * spec.classes[*veto] + spec.minwin[i]});
        } else {
            parts.push_back({indicator({i}), static_cast<long long>(spec.minwin[i])});
        }
    }
    return parts;
}

namespace detail {

inline std::size_t lowest_player(Coalition s) { return static_cast<std::size_t>(std::countr_zero(s)); }

inline LowerPair build_lower_pair(const ExplicitGame& game, std::size_t i, std::size_t j) {
    const GameSpec& spec = game.spec();
    auto maximal_losing = [&](std::size_t c) {
        CoalitionVector v(spec.classes.begin(), spec.classes.end());
        v[c] = spec.minwin[c] - 1;
        return game.canonical_coalition(v);
    };
    LowerPair pair;
    pair.class_i = i;
    pair.class_j = j;
    pair.losing_i = maximal_losing(i);
    pair.losing_j = maximal_losing(j);
    const Coalition a_choices = pair.losing_i & ~pair.losing_j & game.class_mask(j);
    const Coalition b_choices = pair.losing_j & ~pair.losing_i & game.class_mask(i);
    if (a_choices == 0 || b_choices == 0) {
        throw verification_error("no swap witness for classes " + std::to_string(i + 1) + " and " +
                                 std::to_string(j + 1));
    }
    pair.a = lowest_player(a_choices);
    pair.b = lowest_player(b_choices);
    const Coalition bit_a = Coalition{1} << pair.a;
    const Coalition bit_b = Coalition{1} << pair.b;
    pair.swapped_i = (pair.losing_i & ~bit_a) | bit_b;
    pair.swapped_j = (pair.losing_j & ~bit_b) | bit_a;
    return pair;
}

inline void check_lower_pair(const ExplicitGame& game, const LowerPair& p, std::span<const WeightedGame> parts) {
    const std::string where =
        "lower pair (" + std::to_string(p.class_i + 1) + "," + std::to_string(p.class_j + 1) + "): ";
    if (game.is_winning(p.losing_i) || game.is_winning(p.losing_j)) {
        throw verification_error(where + "witness coalition is not losing");
    }
    if (!game.is_winning(p.swapped_i) || !game.is_winning(p.swapped_j)) {
        throw verification_error(where + "swapped coalition is not winning");
    }
    // Same multiset of players on both sides of the trade.
    if ((p.losing_i & p.losing_j) != (p.swapped_i & p.swapped_j) ||
        (p.losing_i | p.losing_j) != (p.swapped_i | p.swapped_j)) {
        throw verification_error(where + "swap is not a trade");
    }
    for (const auto& part : parts) {
        if (!part.accepts(p.losing_i) && !part.accepts(p.losing_j)) {
            throw verification_error(where + "a weighted part rejects both losing coalitions");
        }
    }
}

} // namespace detail

/// Builds and checks the full certificate: the decomposition reproduces the
/// game on the whole coalition-vector lattice, every pair of regular classes
/// has a valid trade witness, and no part can be dropped.
inline DimensionCertificate verify_certificate(const ProperRepresentation& rep,
                                               std::size_t bound = default_brute_bound) {
    const ExplicitGame game(rep.spec());
    require_brute_bound(game.player_count(), bound);

    DimensionCertificate cert;
    cert.value = dimension_of(rep);
    cert.decomposition = decompose(rep);
    if (cert.decomposition.size() != cert.value) {
        throw verification_error("decomposition has " + std::to_string(cert.decomposition.size()) +
                                 " parts, expected " + std::to_string(cert.value));
    }
    for (const auto& part : cert.decomposition) {
        validate_weighted_game(part);
    }
    if (!intersection_equals(game, cert.decomposition, bound)) {
        throw verification_error("decomposition: intersection differs from the game");
    }

    const auto regular = detail::regular_classes(rep.spec());
    if (cert.value >= 2) {
        if (regular.size() != cert.value) {
            throw verification_error("lower bound: " + std::to_string(regular.size()) +
                                     " regular classes cannot certify dimension " + std::to_string(cert.value));
        }
        for (std::size_t x = 0; x < regular.size(); ++x) {
            for (std::size_t y = x + 1; y < regular.size(); ++y) {
                cert.lower_pairs.push_back(detail::build_lower_pair(game, regular[x], regular[y]));
                detail::check_lower_pair(game, cert.lower_pairs.back(), cert.decomposition);
            }
        }
    }

    cert.minimal = true;
    for (std::size_t k = 0; k < cert.decomposition.size(); ++k) {
        std::vector<WeightedGame> rest;
        for (std::size_t q = 0; q < cert.decomposition.size(); ++q) {
            if (q != k) {
                rest.push_back(cert.decomposition[q]);
            }
        }
        if (intersection_equals(game, rest, bound)) {
            cert.minimal = false;
        }
    }
    if (!cert.minimal) {
        throw verification_error("minimality: some part can be dropped without changing the game");
    }
    return cert;
}

} // namespace minwin
