#pragma once

/* JSON rendering of bound and sieve reports. Integers go out as decimal strings. */

#include <nlohmann/json.hpp>

#include <string>

#include "bound_pipeline.hpp"
#include "sieve.hpp"

namespace cmbound {

inline nlohmann::json to_json(BoundReport const & r)
{
    nlohmann::json audit = nlohmann::json::array();
    for (auto const & e : r.audit)
        audit.push_back({ { "name", e.name }, { "value", e.value }, { "formula", e.formula } });
    return {
        { "threshold", r.threshold ? nlohmann::json(r.threshold->get_str()) : nlohmann::json(nullptr) },
        { "threshold_materialized", r.threshold.has_value() },
        { "log_threshold", r.log_threshold },
        { "epsilon1", r.epsilon1 },
        { "epsilon2", r.epsilon2 },
        { "exceptional_field_caveat", r.exceptional_field_caveat },
        { "audit", audit },
    };
}

inline nlohmann::json coeffs_json(ZPoly const & p)
{
    nlohmann::json a = nlohmann::json::array();
    for (auto const & c : p.coeffs())
        a.push_back(c.get_str());
    return a;
}

inline nlohmann::json to_json(CurveSpec const & c)
{
    return {
        { "poly", c.poly.to_string() },
        { "deg_x", std::to_string(c.deg_x) },
        { "deg_y", std::to_string(c.deg_y) },
        { "defining_field_degree", std::to_string(c.defining_field_degree) },
        { "warnings", c.warnings },
    };
}

inline nlohmann::json to_json(SieveReport const & r)
{
    nlohmann::json z = nlohmann::json::array();
    for (auto const & f : r.z_prime)
        z.push_back({ { "variable", std::string(1, f.variable) },
                      { "poly", coeffs_json(f.poly) },
                      { "text", f.to_string() } });
    nlohmann::json hits = nlohmann::json::array();
    for (auto const & h : r.hits)
        hits.push_back({ { "d1", std::to_string(h.d1.value()) },
                         { "d2", std::to_string(h.d2.value()) },
                         { "same_cm_field", h.same_cm_field },
                         { "witness_poly", coeffs_json(h.witness) },
                         { "witness", poly_to_string(h.witness, 'x') } });
    nlohmann::json curve = to_json(r.curve);
    curve["stripped"] = to_json(r.stripped);
    nlohmann::json c11 = to_json(r.c11);
    c11["c9"] = r.c9;
    return {
        { "curve", curve },
        { "z_prime", z },
        { "c11", c11 },
        { "cap", std::to_string(r.enumeration_cap) },
        { "cap_vs_bound", to_string(r.cap_vs_bound) },
        { "hits", hits },
    };
}

} // namespace cmbound
