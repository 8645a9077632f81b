#pragma once

#include "mzv/cache.hpp"
#include "mzv/hoelder.hpp"
#include "mzv/identity.hpp"
#include "mzv/index.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/zeta_single.hpp"

#include <random>
#include <string>

namespace mzv {

// zeta_{k0}(ks; eps) through the integral word: regularize when divergent,
// then sign-weighted Hoelder evaluation of each convergent word.
inline Ball eval_index(const Index& ix, Precision p, ConstantCache* cache = nullptr) {
    std::string key = index_key(ix);
    if (cache)
        if (auto hit = cache->lookup(key, p.working_bits())) return *hit;
    auto [sign, w] = index_to_word(ix);
    Ball b(p.working_bits());
    if (is_convergent(w)) {
        b = eval_word(w, p);
    } else {
        LinComb<Word> reg = shuffle_regularize(w);
        for (const auto& [u, q] : reg.terms()) {
            Ball t = eval_word(u, p);
            b += Ball::from_rational(q, p.working_bits()) * t;
        }
    }
    if (sign < 0) b = -b;
    if (cache) cache->store(key, p.working_bits(), b);
    return b;
}

// Product of factor values; plain depth-1 factors take the accelerated
// single-zeta path.
inline Ball eval_monomial(const Monomial& m, Precision p, ConstantCache* cache = nullptr) {
    Ball b = Ball::from_long(1, p.working_bits());
    for (const Index& f : m.factors) {
        Ball v(p.working_bits());
        if (f.is_plain() && f.depth() == 1 && f.ks[0] >= 2) {
            std::string key = index_key(f);
            if (cache) {
                if (auto hit = cache->lookup(key, p.working_bits())) {
                    b *= *hit;
                    continue;
                }
            }
            v = zeta_single(f.ks[0], p);
            if (cache) cache->store(key, p.working_bits(), v);
        } else {
            v = eval_index(f, p, cache);
        }
        b *= v;
    }
    return b;
}

struct VerificationReport {
    Ball residual;
    bool pass = false;
    int target_digits = 0;
};

// Residual ball of the combination; passes iff
// |residual.mid| <= residual.rad + 10^-(target_digits - 5).
inline VerificationReport eval_identity(const Identity& id, Precision p,
                                        ConstantCache* cache = nullptr) {
    Ball r(p.working_bits());
    for (const auto& [m, q] : id.combination.terms())
        r += Ball::from_rational(q, p.working_bits()) * eval_monomial(m, p, cache);
    mpfr_t tol;
    mpfr_init2(tol, kRadPrec);
    mpfr_set_ui(tol, 10, MPFR_RNDU);
    mpfr_pow_si(tol, tol, -(p.target_digits - 5), MPFR_RNDU);
    VerificationReport rep{r, r.passes(tol), p.target_digits};
    mpfr_clear(tol);
    return rep;
}

// Opens dir's cache and validates it by recomputing one entry at low
// precision; on disagreement the stale entries are dropped and loaded_ok
// reports false.
struct OpenedCache {
    ConstantCache cache;
    bool loaded_ok = true;
    std::size_t loaded_entries = 0;
};

inline OpenedCache open_cache_validated(const std::filesystem::path& dir) {
    OpenedCache oc;
    oc.cache = ConstantCache::bind_dir(dir);
    auto all = oc.cache.entries();
    oc.loaded_entries = all.size();
    if (all.empty()) return oc;
    std::mt19937 rng(std::random_device{}());
    for (int tries = 0; tries < 8; ++tries) {
        const auto& [key, bits, ball] =
            all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        auto ix = parse_index_key(key);
        if (!ix) continue;
        Ball check = eval_index(*ix, Precision(10), nullptr);
        if (!check.overlaps(ball)) {
            oc.cache.discard_all();
            oc.loaded_ok = false;
            oc.loaded_entries = 0;
        }
        return oc;
    }
    return oc;
}

}  // namespace mzv
