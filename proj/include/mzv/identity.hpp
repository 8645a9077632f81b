#pragma once

#include "mzv/lincomb.hpp"
#include "mzv/monomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace mzv {

// A named, parametrized combination of zeta monomials asserted to equal zero.
// Stored as "LHS - RHS" so every family verifies through one interface.
struct Identity {
    std::string name;
    std::map<std::string, int> params;
    LinComb<Monomial> combination;

    // All monomials of a nonzero identity share one total weight.
    bool is_homogeneous() const {
        std::optional<int> w;
        for (const auto& [m, q] : combination.terms()) {
            if (!w)
                w = m.weight();
            else if (*w != m.weight())
                return false;
        }
        return true;
    }

    std::string display_name() const {
        std::string s = name;
        if (!params.empty()) {
            s += "(";
            bool first = true;
            for (const auto& [k, v] : params) {
                if (!first) s += ",";
                s += k + "=" + std::to_string(v);
                first = false;
            }
            s += ")";
        }
        return s;
    }
};

inline std::string to_string(const Identity& id) {
    std::string s = id.display_name() + ": ";
    if (id.combination.is_zero()) return s + "0 = 0";
    bool first = true;
    for (const auto& [m, q] : id.combination.terms()) {
        Rational a = q < 0 ? Rational(-q) : q;
        s += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
        if (a != 1 || m.factors.empty()) {
            s += to_string(a);
            if (!m.factors.empty()) s += "*";
        }
        if (!m.factors.empty()) s += to_string(m);
        first = false;
    }
    return s + " = 0";
}

}  // namespace mzv
