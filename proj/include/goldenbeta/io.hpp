#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "goldenbeta/density.hpp"
#include "goldenbeta/errors.hpp"
#include "goldenbeta/experiments.hpp"
#include "goldenbeta/golden_scalar.hpp"
#include "goldenbeta/rational.hpp"
#include "goldenbeta/words.hpp"

// JSON forms:
//   GoldenScalar  ["p_num/p_den", "q_num/q_den"]
//   Word          "10100"
//   PiecewisePoly {"breakpoints": [scalar, ...], "pieces": [[scalar, ...], ...]}  (ascending coefficients)
//   InvarianceSpec {"m": 2, "constants": {"00": scalar, ...}}

namespace goldenbeta {

inline void to_json(nlohmann::json& j, const GoldenScalar& a) {
    j = nlohmann::json::array({rational_to_string(a.p()), rational_to_string(a.q())});
}

inline void from_json(const nlohmann::json& j, GoldenScalar& a) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw ValidationError("scalar must be a pair of rational strings, got " + j.dump());
    a = GoldenScalar(parse_rational(j[0].get<std::string>()), parse_rational(j[1].get<std::string>()));
}

inline void to_json(nlohmann::json& j, const Word& w) { j = w.to_string(); }

inline void from_json(const nlohmann::json& j, Word& w) {
    if (!j.is_string()) throw ValidationError("word must be a bit string, got " + j.dump());
    w = Word::from_string(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const Polynomial& p) { j = p.coefficients(); }

inline void from_json(const nlohmann::json& j, Polynomial& p) {
    if (!j.is_array()) throw ValidationError("piece must be a coefficient array, got " + j.dump());
    p = Polynomial(j.get<std::vector<GoldenScalar>>());
}

inline void to_json(nlohmann::json& j, const PiecewisePoly& f) {
    j = nlohmann::json{{"breakpoints", f.breakpoints()}, {"pieces", f.pieces()}};
}

inline void from_json(const nlohmann::json& j, PiecewisePoly& f) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("pieces"))
        throw ValidationError("piecewise polynomial needs 'breakpoints' and 'pieces'");
    f = PiecewisePoly(j.at("breakpoints").get<std::vector<GoldenScalar>>(), j.at("pieces").get<std::vector<Polynomial>>());
}

inline void to_json(nlohmann::json& j, const InvarianceSpec& spec) {
    nlohmann::json constants = nlohmann::json::object();
    for (const auto& [w, c] : spec.constants) constants[w.to_string()] = c;
    j = nlohmann::json{{"m", spec.m}, {"constants", constants}};
}

inline void from_json(const nlohmann::json& j, InvarianceSpec& spec) {
    if (!j.is_object() || !j.contains("m") || !j.contains("constants") || !j.at("constants").is_object())
        throw ValidationError("invariance spec needs 'm' and a 'constants' object");
    spec.m = j.at("m").get<int>();
    spec.constants.clear();
    for (const auto& [key, value] : j.at("constants").items()) {
        Word w = Word::from_string(key);
        if (w.size() != spec.m) throw ValidationError("word " + key + " does not have length m");
        spec.constants[w] = value.get<GoldenScalar>();
    }
}

inline nlohmann::json to_json_value(const Distance& d) {
    return nlohmann::json{{"value", d.value}, {"error", d.error}, {"exact", d.exact()}, {"float", to_double(d.value)}};
}

inline void to_json(nlohmann::json& j, const MonteCarloReport& r) {
    j = nlohmann::json{{"n", r.n},
                       {"samples", r.samples},
                       {"seed", r.seed},
                       {"ks_statistic", r.ks_statistic},
                       {"threshold", r.threshold},
                       {"pass", r.pass()}};
}

} // namespace goldenbeta
