#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "holderlab/classifier.hpp"
#include "holderlab/dimension.hpp"
#include "holderlab/fractal_cube.hpp"
#include "holderlab/witness.hpp"

namespace holderlab {

inline std::string format_12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

inline nlohmann::json exponent_to_json(const HolderExponent& s) {
    nlohmann::json j;
    if (s.is_rational()) {
        j["num"] = s.rational_value().num().to_string();
        j["den"] = s.rational_value().den().to_string();
    } else {
        j["symbolic"] = s.to_string();
    }
    j["value"] = s.value();
    return j;
}

inline nlohmann::json witness_summary_json(const MapWitness& w) {
    nlohmann::json j;
    j["source"] = w.source.to_string();
    j["target"] = w.target.to_string();
    j["exponent"] = exponent_to_json(w.s);
    j["constant"] = w.c.to_string();
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : w.atoms) atoms.push_back(a.describe());
    j["atoms"] = std::move(atoms);
    return j;
}

inline nlohmann::json verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["kind"] = v.kind_name();
    j["rule"] = v.rule;
    if (!v.reason.empty()) j["reason"] = v.reason;
    if (v.exponent) j["exponent"] = exponent_to_json(*v.exponent);
    if (v.witness) j["witness"] = witness_summary_json(*v.witness);
    return j;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["pass"] = r.pass;
    j["depth"] = r.depth;
    j["pair_count"] = r.pair_count;
    j["claimed_s"] = r.claimed_s;
    j["claimed_C"] = r.claimed_c;
    j["observed_extremes"] = {{"min", r.observed_min}, {"max", r.observed_max}};
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& viol : r.violations) {
        violations.push_back({{"source_distance", viol.source_distance},
                              {"target_distance", viol.target_distance},
                              {"ratio", viol.ratio},
                              {"x", viol.point_x},
                              {"y", viol.point_y},
                              {"pairs", viol.pairs},
                              {"bound", viol.bound}});
    }
    j["violations"] = std::move(violations);
    return j;
}

inline nlohmann::json td_status_to_json(const TDStatus& st) {
    nlohmann::json j;
    j["status"] = st.kind_name();
    j["depth"] = st.depth;
    j["max_component_cells"] = st.max_component_cells;
    if (st.certified()) {
        nlohmann::json census = nlohmann::json::array();
        for (const auto& shape : st.census) {
            nlohmann::json cells = nlohmann::json::array();
            for (const auto& cell : shape.cells()) cells.push_back(cell);
            census.push_back(std::move(cells));
        }
        j["census"] = std::move(census);
    }
    return j;
}

inline nlohmann::json dimension_to_json(const DimensionValue& d) {
    return {{"value", d.value}, {"value_12", format_12(d.value)}, {"exact_form", d.exact_form}};
}

}  // namespace holderlab
