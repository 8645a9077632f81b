#include "mzv/coaction.hpp"
#include "mzv/families.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace mzv;

namespace {
Word word_of(std::initializer_list<int> signed_ks) {
    return index_to_word(Index::from_signed(signed_ks)).word;
}
}  // namespace

TEST_CASE("D_r is empty past the weight") {
    REQUIRE(coaction_Dr(Word{1, 0}, 3).is_zero());
    REQUIRE(coaction_Dr(Word{}, 1).is_zero());
}

TEST_CASE("raw term count is weight - r + 1") {
    Word w = word_of({-3, -9});
    REQUIRE(w.weight() == 12);
    for (int r = 1; r <= 12; ++r) REQUIRE(coaction_Dr(w, r, true).mass() == Rational(12 - r + 1));
}

TEST_CASE("weights of left and right factors add up") {
    Word w = word_of({2, -3});
    for (int r = 1; r <= 5; ++r) {
        TensorComb t = coaction_Dr(w, r, true);
        for (const auto& [lr, q] : t.terms()) {
            REQUIRE(lr.first.weight() == std::size_t(r));
            REQUIRE(lr.first.weight() + lr.second.weight() == w.weight());
        }
    }
}

TEST_CASE("coaction is linear") {
    Word a = word_of({2, -3}), b = word_of({-1, 3});
    LinComb<Word> c;
    c.add(a, Rational(2));
    c.add(b, Rational(-3, 7));
    TensorComb lhs = coaction_Dr(c, 1);
    TensorComb ra = coaction_Dr(a, 1);
    ra *= Rational(2);
    TensorComb rb = coaction_Dr(b, 1);
    rb *= Rational(-3, 7);
    ra += rb;
    REQUIRE(lhs == ra);
}

TEST_CASE("log-2 classes of weight-1 integrals") {
    auto cls = [](int a, int b, int c) {
        GeneralWord g{letter_from_value(a), {letter_from_value(b)}, letter_from_value(c)};
        return d1_left_class(g).log2_coeff;
    };
    REQUIRE(cls(0, 1, -1) == 1);
    REQUIRE(cls(0, -1, 0) == 0);
    REQUIRE(cls(0, -1, 1) == 1);
    REQUIRE(cls(1, -1, 0) == -1);
    REQUIRE(cls(0, 0, 1) == 0);
    REQUIRE(cls(1, 1, 1) == 0);
}

TEST_CASE("reduce_D1 rejects longer left factors") {
    TensorComb t = coaction_Dr(word_of({2, -3}), 2);
    REQUIRE_THROWS_AS(reduce_D1(t), std::invalid_argument);
}

TEST_CASE("D1 vanishes on the pushdown source") {
    REQUIRE(reduce_D1(coaction_Dr(word_of({-3, -9}), 1)).is_zero());
}

TEST_CASE("D1 vanishes termwise on non-alternating words") {
    for (auto sk : {std::initializer_list<int>{2, 10}, {3, 9}, {1, 1, 4, 6}, {12}}) {
        TensorComb t = coaction_Dr(word_of(sk), 1, true);
        for (const auto& [lr, q] : t.terms()) REQUIRE(d1_left_class(lr.first).log2_coeff == 0);
    }
}

TEST_CASE("D1 detects the sign flip next to a one") {
    auto red = reduce_D1(coaction_Dr(word_of({-1, 3}), 1));
    REQUIRE(red.size() == 2);  // a genuine nonzero class
    Rational total = 0;
    for (const auto& [g, q] : red.terms()) total += q < 0 ? -q : q;
    REQUIRE(total == 2);
}

TEST_CASE("reduce_D1 after coaction is linear") {
    Word a = word_of({-1, 3}), b = word_of({-1, 1, 2});
    LinComb<Word> c;
    c.add(a, Rational(5));
    c.add(b, Rational(1, 3));
    auto lhs = reduce_D1(coaction_Dr(c, 1));
    auto ra = reduce_D1(coaction_Dr(a, 1));
    ra *= Rational(5);
    auto rb = reduce_D1(coaction_Dr(b, 1));
    rb *= Rational(1, 3);
    ra += rb;
    REQUIRE(lhs == ra);
}

TEST_CASE("motivic lift carries depth signs") {
    auto lifted = motivic_lift(LinComb<Monomial>::unit(mono(Index::from_signed({2}))));
    REQUIRE(lifted.size() == 1);
    REQUIRE(lifted.terms().begin()->second == -1);  // odd depth
}

TEST_CASE("D1 kills the lifted theorem1 combination") {
    for (int k = 1; k <= 8; ++k) REQUIRE(d1_log2_class(theorem1(k).combination).is_zero());
}

TEST_CASE("D1 by Leibniz sees every factor of a product") {
    // z(-1,3)^2: the two Leibniz slots double the single-word class
    Word w = word_of({-1, 3});
    LinComb<WordProduct> prod = LinComb<WordProduct>::unit(WordProduct({w, w}));
    auto red = d1_log2_class(prod);
    REQUIRE_FALSE(red.is_zero());
    for (const auto& [wp, q] : red.terms()) {
        REQUIRE(wp.words.size() == 2);
        REQUIRE(denominator(q) == 1);
        REQUIRE(numerator(q) % 2 == 0);
    }
}
