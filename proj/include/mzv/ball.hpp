#pragma once

#include "mzv/rational.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mzv {

// Decimal digits of guaranteed accuracy for an evaluation request.
struct Precision {
    int target_digits;
    explicit Precision(int d) : target_digits(d) {
        if (d < 10) throw std::invalid_argument("target_digits must be >= 10");
    }
    mpfr_prec_t working_bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(target_digits * 3.3219280948873623)) + 64;
    }
};

constexpr mpfr_prec_t kRadPrec = 64;
constexpr long kExactRadLog2 = INT64_MIN;

// A real interval [mid - rad, mid + rad]: arbitrary-precision midpoint plus
// a 64-bit radius that is always rounded outward.  Every operation returns
// a ball containing the exact image of the operands' balls.
class Ball {
public:
    explicit Ball(mpfr_prec_t prec = kRadPrec) : prec_(prec) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set_zero(mid_, 1);
        mpfr_set_zero(rad_, 1);
    }
    Ball(const Ball& o) : prec_(o.prec_) {
        mpfr_init2(mid_, prec_);
        mpfr_init2(rad_, kRadPrec);
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    Ball(Ball&& o) noexcept : prec_(o.prec_) {
        mid_[0] = o.mid_[0];
        rad_[0] = o.rad_[0];
        o.moved_ = true;
    }
    Ball& operator=(const Ball& o) {
        if (this != &o) {
            Ball tmp(o);
            *this = std::move(tmp);
        }
        return *this;
    }
    Ball& operator=(Ball&& o) noexcept {
        if (this != &o) {
            if (!moved_) {
                mpfr_clear(mid_);
                mpfr_clear(rad_);
            }
            prec_ = o.prec_;
            mid_[0] = o.mid_[0];
            rad_[0] = o.rad_[0];
            moved_ = false;
            o.moved_ = true;
        }
        return *this;
    }
    ~Ball() {
        if (!moved_) {
            mpfr_clear(mid_);
            mpfr_clear(rad_);
        }
    }

    static Ball from_long(long v, mpfr_prec_t prec) {
        Ball b(prec);
        mpfr_set_si(b.mid_, v, MPFR_RNDN);  // exact at prec >= 64
        return b;
    }

    static Ball from_rational(const Rational& q, mpfr_prec_t prec) {
        Ball b(prec);
        if (q == 0) return b;
        Int num = numerator(q), den = denominator(q);
        auto set_int = [](mpfr_t dst, const Int& v) {
            // decimal text keeps this exact: dst has enough precision
            mpfr_set_str(dst, v.str().c_str(), 10, MPFR_RNDN);
        };
        auto bits = [](const Int& v) {
            return static_cast<mpfr_prec_t>(boost::multiprecision::msb(abs(v))) + 2;
        };
        mpfr_t n, d;
        mpfr_init2(n, std::max<mpfr_prec_t>(prec, bits(num)));
        mpfr_init2(d, std::max<mpfr_prec_t>(prec, bits(den)));
        set_int(n, num);
        set_int(d, den);
        int t = mpfr_div(b.mid_, n, d, MPFR_RNDN);
        if (t != 0) b.bump_rad_ulp();
        mpfr_clear(n);
        mpfr_clear(d);
        return b;
    }

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }
    bool is_exact() const { return mpfr_zero_p(rad_); }

    friend Ball operator+(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec_, b.prec_));
        int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
        if (t != 0) r.bump_rad_ulp();
        return r;
    }
    friend Ball operator-(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec_, b.prec_));
        int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
        if (t != 0) r.bump_rad_ulp();
        return r;
    }
    friend Ball operator-(const Ball& a) {
        Ball r(a);
        mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
        return r;
    }
    friend Ball operator*(const Ball& a, const Ball& b) {
        Ball r(std::max(a.prec_, b.prec_));
        int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
        // rad = |a|*rb + |b|*ra + ra*rb, all upward
        mpfr_t am, bm, u, v;
        mpfr_init2(am, kRadPrec);
        mpfr_init2(bm, kRadPrec);
        mpfr_init2(u, kRadPrec);
        mpfr_init2(v, kRadPrec);
        mpfr_abs(am, a.mid_, MPFR_RNDU);
        mpfr_abs(bm, b.mid_, MPFR_RNDU);
        mpfr_mul(u, am, b.rad_, MPFR_RNDU);
        mpfr_mul(v, bm, a.rad_, MPFR_RNDU);
        mpfr_add(u, u, v, MPFR_RNDU);
        mpfr_mul(v, a.rad_, b.rad_, MPFR_RNDU);
        mpfr_add(r.rad_, u, v, MPFR_RNDU);
        mpfr_clear(am);
        mpfr_clear(bm);
        mpfr_clear(u);
        mpfr_clear(v);
        if (t != 0) r.bump_rad_ulp();
        return r;
    }
    Ball& operator+=(const Ball& o) { return *this = *this + o; }
    Ball& operator-=(const Ball& o) { return *this = *this - o; }
    Ball& operator*=(const Ball& o) { return *this = *this * o; }

    // exact scaling by 2^e
    Ball mul_pow2(long e) const {
        Ball r(*this);
        mpfr_mul_2si(r.mid_, r.mid_, e, MPFR_RNDN);
        mpfr_mul_2si(r.rad_, r.rad_, e, MPFR_RNDU);
        return r;
    }
    Ball div_ui(unsigned long n) const {
        Ball r(prec_);
        int t = mpfr_div_ui(r.mid_, mid_, n, MPFR_RNDN);
        mpfr_div_ui(r.rad_, rad_, n, MPFR_RNDU);
        if (t != 0) r.bump_rad_ulp();
        return r;
    }
    Ball pow_ui(unsigned e) const {
        Ball r = from_long(1, prec_);
        Ball b = *this;
        for (unsigned m = e; m != 0; m >>= 1) {
            if (m & 1u) r *= b;
            if (m > 1) b *= b;
        }
        return r;
    }

    void add_error(mpfr_srcptr e) { mpfr_add(rad_, rad_, e, MPFR_RNDU); }
    void add_error_2exp(long log2e) {
        mpfr_t e;
        mpfr_init2(e, kRadPrec);
        mpfr_set_ui_2exp(e, 1, log2e, MPFR_RNDU);
        mpfr_add(rad_, rad_, e, MPFR_RNDU);
        mpfr_clear(e);
    }
    void add_error_rational(const Rational& q) {
        Ball e = from_rational(q, kRadPrec);
        mpfr_t t;
        mpfr_init2(t, kRadPrec);
        mpfr_abs(t, e.mid_, MPFR_RNDU);
        mpfr_add(t, t, e.rad_, MPFR_RNDU);
        mpfr_add(rad_, rad_, t, MPFR_RNDU);
        mpfr_clear(t);
    }

    bool contains_zero() const {
        mpfr_t am;
        mpfr_init2(am, kRadPrec);
        mpfr_abs(am, mid_, MPFR_RNDD);  // downward: |mid| underestimate
        bool r = mpfr_cmp(am, rad_) <= 0;
        mpfr_clear(am);
        return r;
    }

    // |mid| <= rad + tol, the verification pass predicate
    bool passes(mpfr_srcptr tol) const {
        mpfr_t am, bound;
        mpfr_init2(am, kRadPrec);
        mpfr_init2(bound, kRadPrec);
        mpfr_abs(am, mid_, MPFR_RNDD);
        mpfr_add(bound, rad_, tol, MPFR_RNDU);
        bool r = mpfr_cmp(am, bound) <= 0;
        mpfr_clear(am);
        mpfr_clear(bound);
        return r;
    }

    // true if the two balls intersect (their values may coincide)
    bool overlaps(const Ball& o) const {
        Ball d = *this - o;
        return d.contains_zero();
    }

    // rad <= 10^-digits * max(1, |mid|)
    bool meets_target(int digits) const {
        mpfr_t lim, am;
        mpfr_init2(lim, kRadPrec);
        mpfr_init2(am, kRadPrec);
        mpfr_abs(am, mid_, MPFR_RNDD);
        if (mpfr_cmp_ui(am, 1) < 0) mpfr_set_ui(am, 1, MPFR_RNDD);
        mpfr_set_ui(lim, 10, MPFR_RNDD);
        mpfr_pow_si(lim, lim, -digits, MPFR_RNDD);
        mpfr_mul(lim, lim, am, MPFR_RNDD);
        bool ok = mpfr_cmp(rad_, lim) <= 0;
        mpfr_clear(lim);
        mpfr_clear(am);
        return ok;
    }

    // Midpoint as a self-describing decimal string; digits = 0 picks enough
    // digits for an exact round-trip at the same precision.
    std::string mid_str(std::size_t digits = 0) const {
        if (mpfr_zero_p(mid_)) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, mid_, MPFR_RNDN);
        std::string m(s);
        mpfr_free_str(s);
        std::string sign;
        if (m[0] == '-') {
            sign = "-";
            m = m.substr(1);
        }
        std::string out = sign + m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(static_cast<long>(e) - 1);
        return out;
    }

    // ceil(log2(rad)), or kExactRadLog2 when rad = 0
    long rad_log2_ceil() const {
        if (mpfr_zero_p(rad_)) return kExactRadLog2;
        mpfr_exp_t e = mpfr_get_exp(rad_);  // rad in [2^(e-1), 2^e)
        return static_cast<long>(e);
    }

    std::string rad_str() const {
        if (is_exact()) return "0";
        char buf[64];
        mpfr_snprintf(buf, sizeof buf, "%.2Re", rad_);
        return buf;
    }

    static Ball from_mid_str(const std::string& mid, long rad_log2, mpfr_prec_t prec) {
        Ball b(prec);
        mpfr_set_str(b.mid_, mid.c_str(), 10, MPFR_RNDN);
        if (rad_log2 != kExactRadLog2) {
            mpfr_set_ui_2exp(b.rad_, 1, rad_log2, MPFR_RNDU);
            b.bump_rad_ulp();  // absorbs the decimal re-read rounding
        } else {
            b.bump_rad_ulp();
        }
        return b;
    }

    double mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

private:
    void bump_rad_ulp() {
        if (mpfr_zero_p(mid_)) {
            // a rounded-to-zero result; exponent range makes this ~2^-(2^62)
            mpfr_t e;
            mpfr_init2(e, kRadPrec);
            mpfr_set_ui_2exp(e, 1, mpfr_get_emin(), MPFR_RNDU);
            mpfr_add(rad_, rad_, e, MPFR_RNDU);
            mpfr_clear(e);
            return;
        }
        mpfr_t e;
        mpfr_init2(e, kRadPrec);
        mpfr_set_ui_2exp(e, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
        mpfr_add(rad_, rad_, e, MPFR_RNDU);
        mpfr_clear(e);
    }

    mutable mpfr_t mid_;
    mutable mpfr_t rad_;
    mpfr_prec_t prec_;
    bool moved_ = false;
};

}  // namespace mzv
