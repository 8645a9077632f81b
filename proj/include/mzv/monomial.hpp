#pragma once

#include "mzv/index.hpp"
#include "mzv/lincomb.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace mzv {

// A product of zeta indices, kept as a sorted multiset.  The empty product
// is the constant 1.
struct Monomial {
    std::vector<Index> factors;

    Monomial() = default;
    Monomial(std::initializer_list<Index> fs) : factors(fs) { normalize(); }
    explicit Monomial(std::vector<Index> fs) : factors(std::move(fs)) { normalize(); }

    void normalize() { std::sort(factors.begin(), factors.end()); }

    int weight() const {
        int w = 0;
        for (const auto& f : factors) w += f.weight();
        return w;
    }
    int degree() const { return static_cast<int>(factors.size()); }

    Monomial with_factor_replaced(std::size_t pos, const Index& repl) const {
        Monomial m = *this;
        m.factors[pos] = repl;
        m.normalize();
        return m;
    }
    Monomial without_factor(std::size_t pos) const {
        Monomial m = *this;
        m.factors.erase(m.factors.begin() + pos);
        return m;
    }
    Monomial times(const Index& ix) const {
        Monomial m = *this;
        m.factors.push_back(ix);
        m.normalize();
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        return a.factors <=> b.factors;
    }
};

inline Monomial mono(const Index& ix) { return Monomial{ix}; }
inline Monomial mono(const Index& a, const Index& b) { return Monomial{a, b}; }

inline std::string to_string(const Monomial& m) {
    if (m.factors.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i) s += "*";
        s += index_key(m.factors[i]);
    }
    return s;
}

}  // namespace mzv
