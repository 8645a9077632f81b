#pragma once

#include "mzv/rational.hpp"

#include <map>
#include <utility>

namespace mzv {

// A finite formal sum of basis elements with exact rational coefficients.
// Zero coefficients are never stored; equality is coefficient-wise.
template <typename B>
class LinComb {
public:
    using Terms = std::map<B, Rational>;

    LinComb() = default;
    static LinComb unit(const B& b) {
        LinComb c;
        c.add(b, 1);
        return c;
    }
    static LinComb single(const B& b, const Rational& q) {
        LinComb c;
        c.add(b, q);
        return c;
    }

    void add(const B& b, const Rational& q) {
        if (q == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Sum of all coefficients (e.g. the shuffle mass).
    Rational mass() const {
        Rational m = 0;
        for (const auto& [b, q] : terms_) m += q;
        return m;
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, q] : o.terms_) add(b, q);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, q] : o.terms_) add(b, -q);
        return *this;
    }
    LinComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [b, q] : terms_) q *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    friend bool operator==(const LinComb&, const LinComb&) = default;

    // Applies f : B -> LinComb<C> linearly.
    template <typename F>
    auto map(F&& f) const {
        using C = typename std::invoke_result_t<F, const B&>::Terms::key_type;
        LinComb<C> out;
        for (const auto& [b, q] : terms_) {
            auto img = f(b);
            img *= q;
            out += img;
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace mzv
