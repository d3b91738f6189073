#pragma once

// JSON report schema v1. Header-only; pulls in the vendored
// nlohmann/json, so only CLI and test targets include it.

#include <json.hpp>

#include "uefg/spectra.hpp"

namespace uefg {

using json = nlohmann::ordered_json;

// integral values serialize as decimal strings (arbitrary precision
// exceeds common JSON number ranges); everything else as
// {order, coefficient list}
inline json value_to_json(const std::optional<Int>& integer,
                          const CycNum& value) {
    if (integer) return integer->get_str();
    json coeffs = json::array();
    for (const auto& c : value.coeffs()) coeffs.push_back(c.get_str());
    return json{{"order", value.order()}, {"coeffs", coeffs}};
}

inline json cyc_to_json(const CycNum& v) {
    return value_to_json(v.as_integer(), v);
}

inline json spectrum_results(const SpectrumReport& r) {
    json evs = json::array();
    for (const auto& g : r.eigenvalues)
        evs.push_back(json{{"value", value_to_json(g.integer, g.value)},
                           {"multiplicity", g.multiplicity.get_str()}});
    return json{{"n", r.n},
                {"d", r.d},
                {"vertex_count", ipow(r.n, r.d).get_str()},
                {"degree", r.degree.get_str()},
                {"all_integral", r.all_integral},
                {"ramanujan_ok", r.ramanujan_ok},
                {"second_max_abs", r.second_max_abs},
                {"eigenvalues", evs}};
}

inline json conjecture_record_json(const ConjectureRecord& rec) {
    json j{{"n", rec.n},
           {"d", rec.d},
           {"vertex_count", ipow(rec.n, rec.d).get_str()},
           {"skipped", rec.skipped}};
    if (!rec.skipped) {
        j["all_integral"] = rec.all_integral;
        if (rec.witness) {
            json b = json::array();
            for (i64 bi : rec.witness->first) b.push_back(bi);
            j["witness"] = json{{"b", b}, {"value", cyc_to_json(rec.witness->second)}};
        } else {
            j["witness"] = nullptr;
        }
    }
    j["timing"] = rec.seconds;
    return j;
}

inline json envelope(const std::string& command, json params, json results,
                     double seconds) {
    return json{{"schema_version", "1"},
                {"command", command},
                {"params", std::move(params)},
                {"results", std::move(results)},
                {"timing", seconds}};
}

}  // namespace uefg
