#pragma once

#include <json.hpp>

#include "ivi/hilbert.hpp"
#include "ivi/invariants.hpp"
#include "ivi/monomial.hpp"
#include "ivi/resolutions.hpp"
#include "ivi/seqpair.hpp"
#include "ivi/stanley.hpp"

namespace ivi {

using json = nlohmann::ordered_json;

inline json pair_to_json(const SequencePair& sp) {
    return json{{"n", sp.nvars}, {"a", sp.starts}, {"b", sp.ends}, {"text", to_text(sp)}};
}

inline json ideal_to_json(const MonomialIdeal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(g.exponents());
    return json{{"nvars", I.nvars()}, {"generators", gens}};
}

inline json series_to_json(const RationalSeries& rs) {
    return json{{"num", rs.num}, {"denom_pow", rs.denom_pow}};
}

inline json betti_to_json(const BettiTable& bt) {
    json rows = json::array();
    for (const auto& [key, mult] : bt.entries)
        rows.push_back(json{{"i", key.first}, {"t", key.second}, {"mult", mult}});
    return json{{"subject", bt.subject == Subject::Ideal ? "ideal" : "quotient"}, {"entries", rows}};
}

inline json partition_to_json(const IntervalPartition& part) {
    json intervals = json::array();
    for (const auto& iv : part.intervals)
        intervals.push_back(json{{"lower", iv.lower}, {"upper", iv.upper}});
    return json{{"value", part.value}, {"intervals", intervals}};
}

inline json primes_to_json(const std::vector<std::vector<int>>& primes) {
    json out = json::array();
    for (const auto& p : primes) out.push_back(p);
    return out;
}

inline json shape_to_json(const Shape& sh) {
    json out{{"tag", shape_name(sh.tag)}};
    if (sh.tag == ShapeTag::Path) out["width"] = sh.path_width;
    if (!sh.witnesses.empty()) out["witnesses"] = sh.witnesses;
    return out;
}

// Every numeric claim carries its source: recursion, oracle, or closed-form.
inline json claim(const std::string& name, const json& value, const std::string& source) {
    return json{{"name", name}, {"value", value}, {"source", source}};
}

inline json report_to_json(const InvariantReport& rep) {
    json claims = json::array();
    claims.push_back(claim("depth_quotient", rep.depth_quotient, "recursion"));
    claims.push_back(claim("sdepth_quotient", rep.sdepth_quotient, "recursion"));
    claims.push_back(claim("dim_quotient", rep.dim_quotient, "recursion"));
    if (rep.depth_ideal) claims.push_back(claim("depth_ideal", *rep.depth_ideal, "recursion"));
    if (rep.sdepth_ideal_lower)
        claims.push_back(claim("sdepth_ideal_lower", *rep.sdepth_ideal_lower, "closed-form"));
    if (rep.closed_form) claims.push_back(claim("closed_form_depth", *rep.closed_form, "closed-form"));
    return json{{"shape", shape_to_json(rep.shape)}, {"claims", claims}};
}

} // namespace ivi
