#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mzv {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial_int(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// binom(a,b) with b > a or b < 0 evaluating to 0
inline Rational binom(long n, long k) { return Rational(binomial_int(n, k)); }

// 2^e for possibly negative e
inline Rational pow2(long e) {
    Int p = Int(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

inline Rational pow_rat(const Rational& base, unsigned e) {
    Rational r = 1;
    Rational b = base;
    for (unsigned m = e; m != 0; m >>= 1) {
        if (m & 1u) r *= b;
        if (m > 1) b *= b;
    }
    return r;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

}  // namespace mzv
