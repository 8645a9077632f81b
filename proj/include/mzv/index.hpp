#pragma once

#include "mzv/word.hpp"

#include <cctype>
#include <compare>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

// An alternating-MZV index (k_1,...,k_d; eps_1,...,eps_d) with an optional
// count k0 of regularization zeros in front of the integral word.
// Barred entries correspond to eps = -1.
struct Index {
    int k0 = 0;
    std::vector<int> ks;
    std::vector<int> eps;  // entries +1 / -1

    Index() = default;
    Index(int k0_, std::vector<int> ks_, std::vector<int> eps_)
        : k0(k0_), ks(std::move(ks_)), eps(std::move(eps_)) {
        validate();
    }
    // Signed shorthand: negative entries are barred, e.g. {2,-10} = (2, 10bar).
    static Index from_signed(const std::vector<int>& signed_ks, int k0 = 0) {
        Index ix;
        ix.k0 = k0;
        for (int v : signed_ks) {
            if (v == 0) throw std::invalid_argument("index entries must be nonzero");
            ix.ks.push_back(std::abs(v));
            ix.eps.push_back(v > 0 ? 1 : -1);
        }
        ix.validate();
        return ix;
    }

    void validate() const {
        if (k0 < 0) throw std::invalid_argument("k0 must be nonnegative");
        if (ks.size() != eps.size()) throw std::invalid_argument("ks/eps length mismatch");
        for (int k : ks)
            if (k < 1) throw std::invalid_argument("index entries must be positive");
        for (int e : eps)
            if (e != 1 && e != -1) throw std::invalid_argument("signs must be +1/-1");
    }

    int depth() const { return static_cast<int>(ks.size()); }
    int weight() const { return k0 + std::accumulate(ks.begin(), ks.end(), 0); }
    bool is_convergent() const {
        if (k0 != 0) return false;
        if (ks.empty()) return true;
        return !(ks.back() == 1 && eps.back() == 1);
    }
    bool is_plain() const {  // non-alternating, no regularization zeros
        if (k0 != 0) return false;
        for (int e : eps)
            if (e != 1) return false;
        return true;
    }

    friend bool operator==(const Index&, const Index&) = default;
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (auto c = a.k0 <=> b.k0; c != 0) return c;
        if (auto c = a.ks <=> b.ks; c != 0) return c;
        // unbarred sorts before barred
        std::size_t n = a.eps.size();
        for (std::size_t i = 0; i < n; ++i) {
            int ra = a.eps[i] == 1 ? 0 : 1, rb = b.eps[i] == 1 ? 0 : 1;
            if (ra != rb) return ra <=> rb;
        }
        return std::strong_ordering::equal;
    }
};

struct SignedWord {
    int sign;  // (-1)^depth
    Word word;
};

// zeta_{k0}(k_1..k_d; eps) = sign * I(0; 0^{k0}, eta_1 0^{k_1-1}, ..., eta_d 0^{k_d-1}; 1)
// with eta_j = prod_{i=j..d} eps_i and sign = (-1)^d.
inline SignedWord index_to_word(const Index& ix) {
    std::vector<Letter> ls;
    ls.reserve(static_cast<std::size_t>(ix.weight()));
    for (int i = 0; i < ix.k0; ++i) ls.push_back(Letter::zero);
    int d = ix.depth();
    std::vector<int> eta(d, 1);
    for (int j = d - 1; j >= 0; --j) eta[j] = ix.eps[j] * (j + 1 < d ? eta[j + 1] : 1);
    for (int j = 0; j < d; ++j) {
        ls.push_back(letter_from_value(eta[j]));
        for (int i = 1; i < ix.ks[j]; ++i) ls.push_back(Letter::zero);
    }
    return {d % 2 == 0 ? 1 : -1, Word(std::move(ls))};
}

// Left inverse of index_to_word; leading zeros become k0.  Total on all words.
inline Index word_to_index(const Word& w) {
    Index ix;
    const auto& ls = w.letters();
    std::size_t i = 0;
    while (i < ls.size() && ls[i] == Letter::zero) {
        ++ix.k0;
        ++i;
    }
    std::vector<int> eta;
    while (i < ls.size()) {
        eta.push_back(letter_value(ls[i]));
        ++i;
        int k = 1;
        while (i < ls.size() && ls[i] == Letter::zero) {
            ++k;
            ++i;
        }
        ix.ks.push_back(k);
    }
    int d = static_cast<int>(eta.size());
    ix.eps.resize(d);
    for (int j = 0; j < d; ++j) ix.eps[j] = eta[j] * (j + 1 < d ? eta[j + 1] : 1);
    return ix;
}

// Inverse of index_key below; returns nothing on malformed input.
inline std::optional<Index> parse_index_key(const std::string& s) {
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) -> std::optional<long> {
        bool neg = false;
        if (allow_sign && i < s.size() && s[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };
    Index ix;
    if (s.rfind("zr(", 0) == 0) {
        i = 3;
        auto k0 = read_int(false);
        if (!k0 || i >= s.size() || s[i] != ';') return std::nullopt;
        ++i;
        ix.k0 = static_cast<int>(*k0);
    } else if (s.rfind("z(", 0) == 0) {
        i = 2;
    } else {
        return std::nullopt;
    }
    if (i < s.size() && s[i] == ')') return i + 1 == s.size() ? std::optional<Index>(ix) : std::nullopt;
    for (;;) {
        auto v = read_int(true);
        if (!v || *v == 0) return std::nullopt;
        ix.ks.push_back(static_cast<int>(std::abs(*v)));
        ix.eps.push_back(*v > 0 ? 1 : -1);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == ')') return i + 1 == s.size() ? std::optional<Index>(ix) : std::nullopt;
        return std::nullopt;
    }
}

// Canonical key, e.g. "z(2,-10)" or "zr(1;1,-2)"; doubles as the cache key
// and round-trips through the expression grammar.
inline std::string index_key(const Index& ix) {
    std::string s = ix.k0 > 0 ? "zr(" + std::to_string(ix.k0) + ";" : "z(";
    for (int j = 0; j < ix.depth(); ++j) {
        if (j) s += ",";
        s += std::to_string(ix.ks[j] * ix.eps[j]);
    }
    s += ")";
    return s;
}

}  // namespace mzv
