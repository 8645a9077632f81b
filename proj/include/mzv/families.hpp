#pragma once

#include "mzv/identity.hpp"
#include "mzv/shuffle.hpp"

#include <stdexcept>
#include <string>

namespace mzv {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// zeta(nbar) + (1 - 2^{1-n}) zeta(n) = 0, for n >= 2.
inline Identity depth1_reduction(int n) {
    if (n < 2) throw std::invalid_argument("depth1_reduction requires n >= 2");
    LinComb<Monomial> c;
    c.add(mono(Index::from_signed({-n})), 1);
    c.add(mono(Index::from_signed({n})), Rational(1) - pow2(1 - n));
    return {"depth1", {{"n", n}}, std::move(c)};
}

// Dihedral symmetry of regularized alternating double zetas:
//   zr(2l-1; 1, -2k) - z(-2k, -2l)
//     = binom(2k+2l-1, 2l-1) z(-(2k+2l))
//       - sum_{r=1}^{2k+2l-2} ((-1)^r binom(r-1,2l-1) + binom(r-1,2k-1)) z(-r) z(2k+2l-r)
// stored as LHS - RHS.  The r = 1 term has coefficient 0 and drops out.
inline Identity dihedral(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("dihedral requires k, l >= 1");
    int w = 2 * k + 2 * l;
    LinComb<Monomial> c;
    c.add(mono(Index::from_signed({1, -2 * k}, 2 * l - 1)), 1);
    c.add(mono(Index::from_signed({-2 * k, -2 * l})), -1);
    c.add(mono(Index::from_signed({-w})), -binom(w - 1, 2 * l - 1));
    for (int r = 1; r <= w - 2; ++r) {
        Rational coef = (r % 2 == 0 ? 1 : -1) * binom(r - 1, 2 * l - 1) + binom(r - 1, 2 * k - 1);
        c.add(mono(Index::from_signed({-r}), Index::from_signed({w - r})), coef);
    }
    return {"dihedral", {{"k", k}, {"l", l}}, std::move(c)};
}

// Galois descent of z(-2k, -2l) to non-alternating double zetas:
//   z(-2k,-2l) = sum_{i=2}^{2k+2l-2} 2^{-i} { binom(i-1,2l-1) z(2k+2l-i, i)
//                                           + binom(i-1,2k-1) z(i, 2k+2l-i) }
//                - z(2k,2l)
//                + sum_{r=2}^{2k+2l-2} (-2)^{-r} binom(r-1,2l-1) z(r) z(2k+2l-r)
//                - 2^{-2k-2l} (2 binom(2k+2l-2,2l-1) + binom(2k+2l-1,2l-1)) z(2k+2l)
inline Identity descent_even(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("descent_even requires k, l >= 1");
    int w = 2 * k + 2 * l;
    LinComb<Monomial> c;
    c.add(mono(Index::from_signed({-2 * k, -2 * l})), 1);
    for (int i = 2; i <= w - 2; ++i) {
        c.add(mono(Index::from_signed({w - i, i})), -pow2(-i) * binom(i - 1, 2 * l - 1));
        c.add(mono(Index::from_signed({i, w - i})), -pow2(-i) * binom(i - 1, 2 * k - 1));
    }
    c.add(mono(Index::from_signed({2 * k, 2 * l})), 1);
    for (int r = 2; r <= w - 2; ++r) {
        Rational coef = pow2(-r) * binom(r - 1, 2 * l - 1);
        if (r % 2 != 0) coef = -coef;
        c.add(mono(Index::from_signed({r}), Index::from_signed({w - r})), -coef);
    }
    c.add(mono(Index::from_signed({w})),
          pow2(-w) * (2 * binom(w - 2, 2 * l - 1) + binom(w - 1, 2 * l - 1)));
    return {"descent", {{"k", k}, {"l", l}}, std::move(c)};
}

// z(2,-2k) + 2k z(1,-(2k+1)) + zr(1; 1,-2k) = 0, derived by the engine:
// shuffling the single-0 word into the word of z(1,-2k) expresses the
// product I(0;0;1) * I(...) = 0, and each shuffle term converts back to an
// index with sign (-1)^depth.
inline Identity goal_regularization(int k) {
    if (k < 1) throw std::invalid_argument("goal_regularization requires k >= 1");
    Word base = index_to_word(Index::from_signed({1, -2 * k})).word;
    LinComb<Word> sh = shuffle(Word{0}, base);
    LinComb<Monomial> c;
    for (const auto& [w, q] : sh.terms()) {
        Index ix = word_to_index(w);
        c.add(mono(ix), ix.depth() % 2 == 0 ? q : -q);
    }
    return {"goal", {{"k", k}}, std::move(c)};
}

// z(2,-2k) + 2k z(1,-(2k+1)) minus its evaluation in depth <= 2
// non-alternating zetas, stored as LHS - RHS.
inline Identity theorem1(int k) {
    if (k < 1) throw std::invalid_argument("theorem1 requires k >= 1");
    int w = 2 * k + 2;
    LinComb<Monomial> c;
    c.add(mono(Index::from_signed({2, -2 * k})), 1);
    c.add(mono(Index::from_signed({1, -(2 * k + 1)})), 2 * k);
    c.add(mono(Index::from_signed({2 * k, 2})), -1);
    for (int i = 2; i <= 2 * k; ++i) {
        c.add(mono(Index::from_signed({w - i, i})), pow2(-i) * binom(i - 1, 1));
        c.add(mono(Index::from_signed({i, w - i})), pow2(-i) * binom(i - 1, 2 * k - 1));
    }
    for (int r = 2; r <= 2 * k; ++r) {
        Rational a = (Rational(1) - pow2(-r)) * binom(r - 1, 1);
        if (r % 2 != 0) a = -a;
        Rational b = binom(r - 1, 2 * k - 1) * (Rational(1) - pow2(1 - r));
        c.add(mono(Index::from_signed({r}), Index::from_signed({w - r})), a + b);
    }
    c.add(mono(Index::from_signed({w})),
          -(Rational(2) + Rational(2 * k - 1) * (Rational(1) + pow2(-w))));
    return {"theorem1", {{"k", k}}, std::move(c)};
}

// The weight-12 pushdown: z(-3,-9) minus its evaluation through the
// depth-4 constant z(1,1,4,6), stored as LHS - RHS.
inline Identity pushdown_39() {
    LinComb<Monomial> c;
    auto z = [](std::initializer_list<int> v) { return Index::from_signed(v); };
    c.add(mono(z({-3, -9})), 1);
    c.add(mono(z({1, 1, 4, 6})), Rational(-9, 64));
    c.add(mono(z({3, 9})), Rational(371, 1024));
    c.add(mono(z({2}), z({3, 7})), Rational(27, 64));
    c.add(mono(z({4}), z({3, 5})), Rational(27, 128));
    c.add(mono(z({3}), z({9})), Rational(-3131, 1024));
    c.add(mono(z({5}), z({7})), Rational(321, 512));
    c.add(Monomial{z({3}), z({3}), z({3}), z({3})}, Rational(3, 256));
    c.add(Monomial{z({2}), z({3}), z({7})}, Rational(45, 32));
    c.add(Monomial{z({2}), z({5}), z({5})}, Rational(63, 128));
    c.add(Monomial{z({4}), z({3}), z({5})}, Rational(-9, 128));
    c.add(Monomial{z({6}), z({3}), z({3})}, Rational(-81, 256));
    c.add(mono(z({12})), Rational(-353139, 2830336));
    return {"pushdown39", {}, std::move(c)};
}

// target - (coeff_target/coeff_rule) * rule, cancelling the pivot monomial.
inline LinComb<Monomial> eliminate(const LinComb<Monomial>& target,
                                   const LinComb<Monomial>& rule, const Monomial& pivot) {
    Rational ct = target.coeff(pivot);
    if (ct == 0) return target;
    Rational cr = rule.coeff(pivot);
    if (cr == 0) throw ConstructionError("elimination rule does not contain pivot " + to_string(pivot));
    LinComb<Monomial> scaled = rule;
    scaled *= ct / cr;
    return target - scaled;
}

// Rewrites every depth-1 barred factor z(-n) to -(1-2^{1-n}) z(n), repeatedly.
inline LinComb<Monomial> eliminate_depth1_bars(LinComb<Monomial> c) {
    for (;;) {
        bool changed = false;
        LinComb<Monomial> next;
        for (const auto& [m, q] : c.terms()) {
            std::size_t pos = m.factors.size();
            for (std::size_t i = 0; i < m.factors.size(); ++i) {
                const Index& f = m.factors[i];
                if (f.k0 == 0 && f.depth() == 1 && f.eps[0] == -1) {
                    pos = i;
                    break;
                }
            }
            if (pos == m.factors.size()) {
                next.add(m, q);
                continue;
            }
            int n = m.factors[pos].ks[0];
            if (n < 2) throw ConstructionError("cannot reduce z(-1)");
            next.add(m.with_factor_replaced(pos, Index::from_signed({n})),
                     q * -(Rational(1) - pow2(1 - n)));
            changed = true;
        }
        c = std::move(next);
        if (!changed) return c;
    }
}

// Mechanical replay of the proof: start from the regularization identity,
// eliminate the regularized double zeta with dihedral(k,1), eliminate
// z(-2k,-2) with descent_even(k,1), then clear all depth-1 bars.  The result
// must match theorem1(k) term for term; anything left barred is a
// transcription bug and raises ConstructionError.
inline Identity assemble_theorem1(int k) {
    if (k < 1) throw std::invalid_argument("assemble_theorem1 requires k >= 1");
    LinComb<Monomial> g = goal_regularization(k).combination;
    g = eliminate(g, dihedral(k, 1).combination, mono(Index::from_signed({1, -2 * k}, 1)));
    g = eliminate(g, descent_even(k, 1).combination, mono(Index::from_signed({-2 * k, -2})));
    g = eliminate_depth1_bars(std::move(g));
    for (const auto& [m, q] : g.terms())
        for (const auto& f : m.factors) {
            bool lhs_term = f.k0 == 0 && f.depth() == 2 && f.eps[0] == 1 && f.eps[1] == -1;
            if (!f.is_plain() && !lhs_term)
                throw ConstructionError("assembly left an unexpected alternating factor in " +
                                        to_string(m));
        }
    return {"assemble-theorem1", {{"k", k}}, std::move(g)};
}

}  // namespace mzv
