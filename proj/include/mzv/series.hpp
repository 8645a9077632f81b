#pragma once

#include "mzv/ball.hpp"
#include "mzv/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mzv {
namespace detail {

// Power-series engine for I(0; y_1..y_m; z), z in (0,1), with exact rational
// letters.  Writing F_j(z) = I(0; y_1..y_j; z), the coefficient recursions
//   y != 0 :  b_n = (b_{n-1} - a_n)/y,  c_{n+1} = b_n/(n+1)
//   y == 0 :  c_n = a_n/n
// follow from F_j'(z) = F_{j-1}(z)/(z - y_j).  With s nonzero letters the
// coefficients obey |c_n| <= beta^n n^{s-1}, beta = max|1/y|, so the tail
// past N is at most sum_{n>N} n^{s-1} q^n with q = beta*z, which we bound by
// the geometric majorant below.  All series here have q <= 1/2.
class IterIntSeries {
public:
    // Requires |z / y| <= 1/2 for every nonzero letter fed in later.
    IterIntSeries(const Rational& z, int max_nonzero_letters, mpfr_prec_t prec)
        : z_(z), prec_(prec), smax_(max_nonzero_letters) {
        n_trunc_ = choose_truncation();
        // F_0 = 1
        coeffs_.reserve(n_trunc_ + 1);
        for (long i = 0; i <= n_trunc_; ++i) coeffs_.emplace_back(prec_);
        coeffs_[0] = Ball::from_long(1, prec_);
        scratch_.assign(coeffs_.size(), Ball(prec_));
    }

    int letters_processed() const { return letters_; }

    void push_letter(const Rational& y) {
        if (letters_ == 0 && y == 0)
            throw std::domain_error("series word must start with a nonzero letter");
        if (y != 0) {
            Rational ratio = z_ / y;
            if (ratio < 0) ratio = -ratio;
            if (2 * ratio > 1) throw std::domain_error("letter too close to expansion point");
            Ball inv = Ball::from_rational(Rational(1) / y, prec_);
            Ball b(prec_);
            scratch_[0] = Ball(prec_);
            for (long n = 0; n + 1 <= n_trunc_; ++n) {
                b = (b - coeffs_[n]) * inv;
                scratch_[n + 1] = b.div_ui(static_cast<unsigned long>(n + 1));
            }
            ++nonzero_;
        } else {
            scratch_[0] = Ball(prec_);
            for (long n = 1; n <= n_trunc_; ++n)
                scratch_[n] = coeffs_[n].div_ui(static_cast<unsigned long>(n));
        }
        std::swap(coeffs_, scratch_);
        ++letters_;
        if (nonzero_ > smax_) throw std::logic_error("more nonzero letters than declared");
    }

    // Value of the series at z for the letters pushed so far, tail included.
    Ball value() const {
        if (letters_ == 0) return Ball::from_long(1, prec_);
        Ball zb = Ball::from_rational(z_, prec_);
        Ball acc(prec_);
        for (long n = n_trunc_; n >= 1; --n) acc = (acc + coeffs_[n]) * zb;
        acc.add_error_rational(tail_bound_);
        return acc;
    }

private:
    // Least N with (N+1)^{s-1} q^{N+1} / (1 - rho) <= 2^-(prec+8),
    // rho = q ((N+2)/(N+1))^{s-1}; verified in exact arithmetic.
    long choose_truncation() {
        int s = std::max(smax_, 1);
        double lq = -1.0;  // log2 q <= -1
        long n = static_cast<long>(prec_) + 16;
        for (;;) {
            double lt = (s - 1) * std::log2(double(n + 1)) + (n + 1) * lq + 1.0;
            if (lt <= -double(prec_ + 8)) break;
            n = n + n / 8 + 8;
        }
        Rational q(1, 2);
        for (;;) {
            Rational rho = q * pow_rat(Rational(n + 2, n + 1), static_cast<unsigned>(s - 1));
            if (rho < 1) {
                Rational bound = pow_rat(Rational(n + 1), static_cast<unsigned>(s - 1)) *
                                 pow_rat(q, static_cast<unsigned>(n + 1)) / (Rational(1) - rho);
                if (bound <= pow2(-(static_cast<long>(prec_) + 8))) {
                    tail_bound_ = bound;
                    return n;
                }
            }
            n = n + n / 8 + 8;
        }
    }

    Rational z_;
    mpfr_prec_t prec_;
    int smax_;
    int letters_ = 0;
    int nonzero_ = 0;
    long n_trunc_ = 0;
    Rational tail_bound_;
    std::vector<Ball> coeffs_;
    std::vector<Ball> scratch_;
};

// One-shot evaluation of I(0; letters; z).
inline Ball eval_iterint_series(const std::vector<Rational>& letters, const Rational& z,
                                mpfr_prec_t prec) {
    if (letters.empty()) return Ball::from_long(1, prec);
    int s = 0;
    for (const auto& y : letters)
        if (y != 0) ++s;
    IterIntSeries ser(z, s, prec);
    for (const auto& y : letters) ser.push_letter(y);
    return ser.value();
}

}  // namespace detail
}  // namespace mzv
