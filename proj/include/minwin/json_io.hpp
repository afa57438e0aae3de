#pragma once

// JSON forms of game specs, dimension certificates and cross-check reports.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minwin/catalog.hpp"
#include "minwin/dimension.hpp"
#include "minwin/games.hpp"
#include "minwin/oracle.hpp"

namespace minwin {

using json = nlohmann::json;

/// Counts that fit in 64 bits become JSON integers, larger ones decimal strings.
inline json count_to_json(const Count& c) {
    if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(c);
    }
    return c.str();
}

inline void to_json(json& j, const GameSpec& spec) { j = json{{"classes", spec.classes}, {"minwin", spec.minwin}}; }

/// Parses {"classes":[...],"minwin":[...]}; throws validation_error on any malformed field.
inline void from_json(const json& j, GameSpec& spec) {
    if (!j.is_object() || !j.contains("classes") || !j.contains("minwin")) {
        throw validation_error("game spec JSON needs \"classes\" and \"minwin\" arrays");
    }
    auto read = [](const json& arr, const char* name) {
        if (!arr.is_array()) {
            throw validation_error(std::string("\"") + name + "\" must be an array");
        }
        std::vector<unsigned> out;
        for (const auto& v : arr) {
            if (!v.is_number_unsigned()) {
                throw validation_error(std::string("\"") + name + "\" entries must be non-negative integers");
            }
            out.push_back(v.get<unsigned>());
        }
        return out;
    };
    spec.classes = read(j.at("classes"), "classes");
    spec.minwin = read(j.at("minwin"), "minwin");
}

inline void to_json(json& j, const ProperRepresentation& rep) { j = rep.spec(); }

inline void to_json(json& j, const WeightedGame& g) { j = json{{"weights", g.weights}, {"quota", g.quota}}; }

inline std::vector<std::size_t> players_of(Coalition s) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; s != 0; ++p, s >>= 1) {
        if (s & 1U) {
            out.push_back(p);
        }
    }
    return out;
}

/// Class indices are 1-based in JSON; players are 0-based labels.
inline void to_json(json& j, const LowerPair& p) {
    j = json{{"classes", {p.class_i + 1, p.class_j + 1}},
             {"losing", {players_of(p.losing_i), players_of(p.losing_j)}},
             {"swap", {{"a", p.a}, {"b", p.b}}},
             {"winning", {players_of(p.swapped_i), players_of(p.swapped_j)}}};
}

inline void to_json(json& j, const DimensionCertificate& c) {
    j = json{{"dimension", c.value}, {"parts", c.decomposition}, {"lower_pairs", c.lower_pairs}, {"minimal", c.minimal}};
}

inline void to_json(json& j, const CheckRow& r) {
    j = json{{"check", r.check},
             {"method", r.method},
             {"n", r.n},
             {"t", r.t ? json(*r.t) : json(nullptr)},
             {"expected", count_to_json(r.expected)},
             {"actual", count_to_json(r.actual)},
             {"pass", r.pass()}};
}

inline void to_json(json& j, const CrossCheckReport& r) {
    j = json{{"max_n", r.max_n}, {"success", r.success()}, {"checks", r.rows}};
}

} // namespace minwin
