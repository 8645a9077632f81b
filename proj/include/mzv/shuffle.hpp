#pragma once

#include "mzv/lincomb.hpp"
#include "mzv/word.hpp"

#include <cstddef>

namespace mzv {

// Shuffle product: sum over all order-preserving interleavings, with
// multiplicities as coefficients.  The empty word is the unit.
inline LinComb<Word> shuffle(const Word& a, const Word& b) {
    if (a.empty()) return LinComb<Word>::unit(b);
    if (b.empty()) return LinComb<Word>::unit(a);
    LinComb<Word> out;
    auto prepend_all = [](Letter l, const LinComb<Word>& c) {
        LinComb<Word> r;
        for (const auto& [w, q] : c.terms()) r.add(w.prepend(l), q);
        return r;
    };
    out += prepend_all(a.front(), shuffle(a.suffix_from(1), b));
    out += prepend_all(b.front(), shuffle(a, b.suffix_from(1)));
    return out;
}

// Bilinear extension to formal sums.
inline LinComb<Word> shuffle(const LinComb<Word>& a, const LinComb<Word>& b) {
    LinComb<Word> out;
    for (const auto& [wa, qa] : a.terms())
        for (const auto& [wb, qb] : b.terms()) {
            auto s = shuffle(wa, wb);
            s *= qa * qb;
            out += s;
        }
    return out;
}

// Shuffle regularization: the unique algebra-homomorphic extension fixed by
// reg(w) = w on convergent words and reg((0)) = reg((1)) = 0.  Leading zeros
// are stripped first, then trailing ones; every output word is convergent.
inline LinComb<Word> shuffle_regularize(const Word& w);

namespace detail {

inline LinComb<Word> regularize_lc(const LinComb<Word>& c) {
    LinComb<Word> out;
    for (const auto& [w, q] : c.terms()) {
        auto r = shuffle_regularize(w);
        r *= q;
        out += r;
    }
    return out;
}

// reg(0^a u) = -(1/a) sum_j reg(0^{a-1} u with a 0 inserted after u_j),
// from shuffling a single 0 into 0^{a-1} u and reg((0)) = 0.
inline LinComb<Word> strip_leading_zeros(const Word& w) {
    std::size_t a = 0;
    const auto& ls = w.letters();
    while (a < ls.size() && ls[a] == Letter::zero) ++a;
    if (a == 0) return LinComb<Word>::unit(w);
    if (a == ls.size()) return {};  // reg(0^a) = 0
    Word u = w.suffix_from(a);
    LinComb<Word> out;
    for (std::size_t j = 1; j <= u.weight(); ++j) {
        Word t = u.insert_at(j, Letter::zero);
        for (std::size_t i = 1; i < a; ++i) t = t.prepend(Letter::zero);
        out += strip_leading_zeros(t);
    }
    out *= Rational(-1, static_cast<long>(a));
    return out;
}

// Mirror step for trailing ones: reg(u 1^b) = -(1/b) sum over inserting a 1
// strictly before u's last letter.
inline LinComb<Word> strip_trailing_ones(const Word& w) {
    std::size_t n = w.weight();
    std::size_t b = 0;
    const auto& ls = w.letters();
    while (b < n && ls[n - 1 - b] == Letter::plus) ++b;
    if (b == 0) return LinComb<Word>::unit(w);
    if (b == n) return {};  // reg(1^b) = 0
    Word u = w.prefix(n - b);
    LinComb<Word> out;
    for (std::size_t j = 0; j + 1 <= u.weight(); ++j) {
        Word t = u.insert_at(j, Letter::plus);
        for (std::size_t i = 1; i < b; ++i) t = t.append(Letter::plus);
        out += strip_trailing_ones(t);
    }
    out *= Rational(-1, static_cast<long>(b));
    return out;
}

}  // namespace detail

inline LinComb<Word> shuffle_regularize(const Word& w) {
    if (is_convergent(w)) return LinComb<Word>::unit(w);
    LinComb<Word> no_zeros = detail::strip_leading_zeros(w);
    LinComb<Word> out;
    for (const auto& [u, q] : no_zeros.terms()) {
        auto r = detail::strip_trailing_ones(u);
        r *= q;
        out += r;
    }
    return out;
}

inline LinComb<Word> shuffle_regularize(const LinComb<Word>& c) {
    return detail::regularize_lc(c);
}

}  // namespace mzv
