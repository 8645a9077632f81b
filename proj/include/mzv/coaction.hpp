#pragma once

#include "mzv/lincomb.hpp"
#include "mzv/monomial.hpp"
#include "mzv/word.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

// Weight-1 class of the level-2 Lie coalgebra, identified with the log-2
// line: the class of a weight-1 integral is its log-2 coefficient.
struct L1Class {
    Rational log2_coeff;
};

// Formal sum of (left tensor right) word pairs with rational coefficients.
class TensorComb {
public:
    using Terms = std::map<std::pair<GeneralWord, GeneralWord>, Rational>;

    void add(const GeneralWord& l, const GeneralWord& r, const Rational& q) {
        if (q == 0) return;
        auto [it, inserted] = terms_.try_emplace({l, r}, q);
        if (!inserted) {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational mass() const {
        Rational m = 0;
        for (const auto& [k, q] : terms_) m += q;
        return m;
    }
    TensorComb& operator+=(const TensorComb& o) {
        for (const auto& [k, q] : o.terms_) add(k.first, k.second, q);
        return *this;
    }
    TensorComb& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, q] : terms_) q *= s;
        return *this;
    }
    friend bool operator==(const TensorComb&, const TensorComb&) = default;

private:
    Terms terms_;
};

// D_r on a word with implicit endpoints 0 and 1: one cut per p,
//   I^L(a_p; a_{p+1..p+r}; a_{p+r+1}) (x) I(a_0; a_1..a_p, a_{p+r+1}..a_w; a_{w+1}).
// Cleaned output drops cuts with equal endpoints (I(a;...;a) = 0); raw keeps
// every term of the sum.
inline TensorComb coaction_Dr(const Word& w, int r, bool raw = false) {
    if (r < 1) throw std::invalid_argument("coaction_Dr requires r >= 1");
    TensorComb out;
    const auto& ls = w.letters();
    long n = static_cast<long>(ls.size());
    auto at = [&](long i) -> Letter {
        if (i == 0) return Letter::zero;
        if (i == n + 1) return Letter::plus;
        return ls[i - 1];
    };
    for (long p = 0; p + r <= n; ++p) {
        GeneralWord left;
        left.lower = at(p);
        for (long i = p + 1; i <= p + r; ++i) left.letters.push_back(at(i));
        left.upper = at(p + r + 1);
        if (!raw && left.lower == left.upper) continue;
        GeneralWord right;
        right.lower = Letter::zero;
        right.upper = Letter::plus;
        for (long i = 1; i <= p; ++i) right.letters.push_back(at(i));
        for (long i = p + r + 1; i <= n; ++i) right.letters.push_back(at(i));
        out.add(left, right, 1);
    }
    return out;
}

inline TensorComb coaction_Dr(const LinComb<Word>& c, int r, bool raw = false) {
    TensorComb out;
    for (const auto& [w, q] : c.terms()) {
        TensorComb t = coaction_Dr(w, r, raw);
        t *= q;
        out += t;
    }
    return out;
}

// log-2 class of a weight-1 integral I(a; b; c): nu(c-b) - nu(a-b) with
// nu(+-2) = 1 and nu(0) = nu(+-1) = 0; divergent differences (b = a or
// b = c) and log(-1) both drop to 0 under the constant-term convention.
inline L1Class d1_left_class(const GeneralWord& g) {
    if (g.letters.size() != 1)
        throw std::invalid_argument("d1_left_class needs a weight-1 left factor");
    auto nu = [](int x) { return (x == 2 || x == -2) ? 1 : 0; };
    int b = letter_value(g.letters[0]);
    return {Rational(nu(letter_value(g.upper) - b) - nu(letter_value(g.lower) - b))};
}

// Replaces every weight-1 left factor by its log-2 coefficient, returning
// the lambda-weighted right factors (zero-cleaned).
inline LinComb<GeneralWord> reduce_D1(const TensorComb& t) {
    LinComb<GeneralWord> out;
    for (const auto& [lr, q] : t.terms()) out.add(lr.second, q * d1_left_class(lr.first).log2_coeff);
    return out;
}

// A multiset of plain (0..1) words; basis for right factors of D_1 applied
// to products.  The empty product is the constant 1.
struct WordProduct {
    std::vector<Word> words;

    WordProduct() = default;
    explicit WordProduct(std::vector<Word> ws) : words(std::move(ws)) { normalize(); }
    void normalize() { std::sort(words.begin(), words.end()); }

    friend bool operator==(const WordProduct&, const WordProduct&) = default;
    friend std::strong_ordering operator<=>(const WordProduct& a, const WordProduct& b) {
        return a.words <=> b.words;
    }
};

inline std::string to_string(const WordProduct& wp) {
    if (wp.words.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < wp.words.size(); ++i) {
        if (i) s += "*";
        s += to_string(wp.words[i]);
    }
    return s;
}

// D_1 on a product of words by the Leibniz rule, with left factors already
// reduced to the log-2 line and right factors kept as word products.
inline LinComb<WordProduct> d1_log2_class(const LinComb<WordProduct>& c) {
    LinComb<WordProduct> out;
    for (const auto& [wp, q] : c.terms()) {
        for (std::size_t j = 0; j < wp.words.size(); ++j) {
            LinComb<GeneralWord> red = reduce_D1(coaction_Dr(wp.words[j], 1));
            for (const auto& [g, lam] : red.terms()) {
                std::vector<Word> rest;
                rest.reserve(wp.words.size());
                for (std::size_t i = 0; i < wp.words.size(); ++i)
                    if (i != j) rest.push_back(wp.words[i]);
                rest.push_back(Word(g.letters));
                out.add(WordProduct(std::move(rest)), q * lam);
            }
        }
    }
    return out;
}

// Motivic lift of a zeta monomial combination: each index factor maps to its
// integral word with the (-1)^depth prefactor.
inline LinComb<WordProduct> motivic_lift(const LinComb<Monomial>& comb) {
    LinComb<WordProduct> out;
    for (const auto& [m, q] : comb.terms()) {
        Rational coeff = q;
        std::vector<Word> ws;
        ws.reserve(m.factors.size());
        for (const Index& f : m.factors) {
            auto [sign, w] = index_to_word(f);
            if (sign < 0) coeff = -coeff;
            ws.push_back(std::move(w));
        }
        out.add(WordProduct(std::move(ws)), coeff);
    }
    return out;
}

inline LinComb<WordProduct> d1_log2_class(const LinComb<Monomial>& comb) {
    return d1_log2_class(motivic_lift(comb));
}

}  // namespace mzv
