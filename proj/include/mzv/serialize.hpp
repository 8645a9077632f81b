#pragma once

#include "mzv/evaluator.hpp"
#include "mzv/identity.hpp"

#include <json.hpp>

#include <string>

namespace mzv {

using Json = nlohmann::ordered_json;

// Canonical form {name, params, terms:[{coeff_num, coeff_den, factors:
// [[k0,[k...],[eps...]],...]},...]}.  Coefficients are decimal strings so
// arbitrary-size rationals survive any JSON reader; term order is the
// canonical monomial order.
inline Json identity_to_json(const Identity& id) {
    Json j;
    j["name"] = id.name;
    j["params"] = Json::object();
    for (const auto& [k, v] : id.params) j["params"][k] = v;
    j["terms"] = Json::array();
    for (const auto& [m, q] : id.combination.terms()) {
        Json t;
        t["coeff_num"] = numerator(q).str();
        t["coeff_den"] = denominator(q).str();
        t["factors"] = Json::array();
        for (const Index& f : m.factors) t["factors"].push_back(Json::array({f.k0, f.ks, f.eps}));
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline Json ball_to_json(const Ball& b, int digits) {
    Json j;
    j["mid"] = b.mid_str(static_cast<std::size_t>(digits));
    j["rad"] = b.rad_str();
    j["rad_log2"] = b.rad_log2_ceil() == kExactRadLog2 ? Json(nullptr) : Json(b.rad_log2_ceil());
    return j;
}

inline Json report_to_json(const Identity& id, const VerificationReport& rep) {
    Json j;
    j["type"] = "verification";
    j["name"] = id.name;
    j["params"] = Json::object();
    for (const auto& [k, v] : id.params) j["params"][k] = v;
    j["digits"] = rep.target_digits;
    j["residual"] = ball_to_json(rep.residual, 10);
    j["pass"] = rep.pass;
    return j;
}

inline Json eval_to_json(const std::string& text, const Ball& b, int digits) {
    Json j;
    j["type"] = "evaluation";
    j["expr"] = text;
    j["digits"] = digits;
    j["value"] = ball_to_json(b, digits);
    return j;
}

}  // namespace mzv
