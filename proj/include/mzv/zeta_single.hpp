#pragma once

#include "mzv/ball.hpp"
#include "mzv/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mzv {

// zeta(n) for integer n >= 2, via the Chebyshev-weighted alternating series
// (P. Borwein's algorithm):
//   zeta(s) = -1/(d_M (1-2^{1-s})) sum_{k=0}^{M-1} (-1)^k (d_k - d_M)/(k+1)^s + err,
//   d_k = M sum_{i=0}^{k} (M+i-1)! 4^i / ((M-i)! (2i)!),
//   |err| <= 3 / ((3+sqrt(8))^M |1-2^{1-s}|).
// Everything up to the final rounding is exact rational arithmetic.
inline Ball zeta_single(int n, Precision p) {
    if (n < 2) throw std::invalid_argument("zeta_single requires n >= 2");
    mpfr_prec_t prec = p.working_bits();
    for (int attempt = 0; attempt < 4; ++attempt) {
        // 6 * (3+sqrt8)^-M <= 2^-(prec+6); log2(3+sqrt8) > 2.543
        long m = static_cast<long>(std::ceil((double(prec) + 10.0) / 2.543)) + 2;
        std::vector<Rational> d(m + 1);
        Rational t(1, m);  // t_i = (M+i-1)! 4^i / ((M-i)! (2i)!)
        d[0] = 1;          // M * t_0
        Rational acc = t;
        for (long i = 1; i <= m; ++i) {
            t *= Rational(4 * (m + i - 1) * (m - i + 1), 2 * i * (2 * i - 1));
            acc += t;
            d[i] = m * acc;
        }
        Rational s = 0;
        for (long k = 0; k < m; ++k) {
            Rational term = (d[k] - d[m]) / Rational(pow(Int(k + 1), static_cast<unsigned>(n)));
            s += (k % 2 == 0) ? term : -term;
        }
        Rational scale = Rational(1) - pow2(1 - n);
        Ball b = Ball::from_rational(-s / (d[m] * scale), prec);
        long err_exp = static_cast<long>(std::ceil(2.6 - 2.543 * double(m)));
        b.add_error_2exp(err_exp);
        if (b.meets_target(p.target_digits)) return b;
        prec += prec / 2;
    }
    throw std::runtime_error("zeta_single failed to meet the radius target");
}

}  // namespace mzv
