#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bmweights/cycles.hpp"
#include "bmweights/errors.hpp"
#include "bmweights/field.hpp"
#include "bmweights/specs.hpp"

/* JSON form of a cycle:
 *
 *   {"basis": "Z" | "X",
 *    "terms": [{"weight": "w:...", "coeff": n}, ...]}
 *
 * Terms are sorted by the weight string, bytewise, so serialization is
 * deterministic.  Coefficients are JSON integers when they fit in 64 bits
 * and decimal strings otherwise; the reader accepts both.
 */

namespace bmweights {

inline nlohmann::ordered_json cycle_to_json(const Cycle& z) {
    std::vector<std::pair<std::string, BigInt>> terms;
    terms.reserve(z.coeffs.size());
    for (const auto& [w, c] : z.coeffs) terms.emplace_back(format_weight_spec(w), c);
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::ordered_json out;
    out["basis"] = z.basis == BasisKind::ZSide ? "Z" : "X";
    out["terms"] = nlohmann::ordered_json::array();
    for (const auto& [key, c] : terms) {
        nlohmann::ordered_json term;
        term["weight"] = key;
        if (c >= std::numeric_limits<std::int64_t>::min() &&
            c <= std::numeric_limits<std::int64_t>::max())
            term["coeff"] = static_cast<std::int64_t>(c);
        else
            term["coeff"] = c.str();
        out["terms"].push_back(std::move(term));
    }
    return out;
}

inline Cycle cycle_from_json(const FieldDatum& fd, const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("cycle JSON needs 'basis' and 'terms'", 0);
    std::string basis = j.at("basis").get<std::string>();
    BasisKind kind;
    if (basis == "Z") kind = BasisKind::ZSide;
    else if (basis == "X") kind = BasisKind::XSide;
    else throw ParseError("cycle basis must be 'Z' or 'X'", 0);
    Cycle z(fd, kind);
    for (const auto& term : j.at("terms")) {
        SerreWeight w = parse_weight_spec(fd, term.at("weight").get<std::string>());
        BigInt c;
        const auto& cj = term.at("coeff");
        if (cj.is_number_integer()) c = cj.get<std::int64_t>();
        else if (cj.is_string()) c = BigInt(cj.get<std::string>());
        else throw ParseError("cycle coefficient must be an integer or string", 0);
        z.add_term(w, c);
    }
    return z;
}

}  // namespace bmweights
