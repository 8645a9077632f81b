#pragma once

#include "mzv/series.hpp"
#include "mzv/word.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

struct DivergentWordError : std::domain_error {
    explicit DivergentWordError(const std::string& w)
        : std::domain_error("divergent word " + w + " (regularize first)") {}
};

namespace detail {

// I(0; w; 1) by splitting the path at 1/2:
//   I(0; w; 1) = sum_{w = u.v} I(0; u; 1/2) * I(1/2; v; 1),
// and I(1/2; v; 1) = (-1)^|v| I(0; reverse(1 - v); 1/2) via t -> 1-t, which
// keeps every piece on [0, 1/2] over letters of absolute value >= 1.  Both
// sweeps extend one letter at a time, so all n+1 splittings cost two passes.
inline Ball eval_word_at_prec(const Word& w, mpfr_prec_t prec) {
    const auto& ls = w.letters();
    std::size_t n = ls.size();
    Rational half(1, 2);

    std::vector<Ball> low;  // low[j] = I(0; w_1..w_j; 1/2)
    low.reserve(n + 1);
    {
        IterIntSeries ser(half, static_cast<int>(n), prec);
        low.push_back(ser.value());
        for (std::size_t i = 0; i < n; ++i) {
            ser.push_letter(Rational(letter_value(ls[i])));
            low.push_back(ser.value());
        }
    }
    std::vector<Ball> high(n + 1, Ball(prec));  // high[j] = I(1/2; w_{j+1}..w_n; 1)
    {
        IterIntSeries ser(half, static_cast<int>(n), prec);
        high[n] = ser.value();
        for (std::size_t i = 0; i < n; ++i) {
            ser.push_letter(Rational(1 - letter_value(ls[n - 1 - i])));
            Ball v = ser.value();
            high[n - 1 - i] = (i % 2 == 0) ? -v : v;
        }
    }
    Ball total(prec);
    for (std::size_t j = 0; j <= n; ++j) total += low[j] * high[j];
    return total;
}

}  // namespace detail

// Guaranteed enclosure of I(0; w; 1) with rad <= 10^-digits * max(1, |mid|).
inline Ball eval_word(const Word& w, Precision p) {
    if (w.empty()) return Ball::from_long(1, p.working_bits());
    if (!is_convergent(w)) throw DivergentWordError(to_string(w));
    mpfr_prec_t prec = p.working_bits();
    for (int attempt = 0; attempt < 6; ++attempt) {
        Ball b = detail::eval_word_at_prec(w, prec);
        if (b.meets_target(p.target_digits)) return b;
        prec += prec / 2;
    }
    throw std::runtime_error("eval_word failed to meet the radius target for " + to_string(w));
}

namespace detail {

// I(0; y_1..y_m; 1/2) computed through a second composition at 1/4, with the
// upper sub-pieces reflected by t -> 1/2 - t.  Used to cross-check the
// single-split evaluation; letters may be any rationals of |y| >= 1.
inline Ball eval_half_piece_two_level(const std::vector<Rational>& ys, mpfr_prec_t prec) {
    std::size_t m = ys.size();
    Rational quarter(1, 4);
    Ball total(prec);
    for (std::size_t j = 0; j <= m; ++j) {
        std::vector<Rational> lower(ys.begin(), ys.begin() + j);
        std::vector<Rational> upper;  // 1/2 - y, reversed
        upper.reserve(m - j);
        for (std::size_t i = m; i > j; --i) upper.push_back(Rational(1, 2) - ys[i - 1]);
        Ball piece = eval_iterint_series(lower, quarter, prec) *
                     eval_iterint_series(upper, quarter, prec);
        if ((m - j) % 2 != 0) piece = -piece;
        total += piece;
    }
    return total;
}

// Split at 1/2, then evaluate every [0,1/2] piece through the 1/4 split.
inline Ball eval_word_two_level(const Word& w, mpfr_prec_t prec) {
    const auto& ls = w.letters();
    std::size_t n = ls.size();
    Ball total(prec);
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<Rational> lower;
        for (std::size_t i = 0; i < j; ++i) lower.push_back(Rational(letter_value(ls[i])));
        std::vector<Rational> upper;
        for (std::size_t i = n; i > j; --i) upper.push_back(Rational(1 - letter_value(ls[i - 1])));
        Ball piece = eval_half_piece_two_level(lower, prec) *
                     eval_half_piece_two_level(upper, prec);
        if ((n - j) % 2 != 0) piece = -piece;
        total += piece;
    }
    return total;
}

}  // namespace detail
}  // namespace mzv
