#pragma once

#include "mzv/coaction.hpp"
#include "mzv/evaluator.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"
#include "mzv/word.hpp"

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mzv {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(std::size_t p, const std::string& msg)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Parsed tree over: zeta calls, word literals, rational scalars, +, *.
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | zeta | word | '(' expr ')'
//   zeta   := 'z' '(' int (',' int)* ')' | 'zr' '(' uint ';' int (',' int)* ')'
//   word   := 'I' '(' letter (',' letter)* ')'       letter := '0'|'1'|'-1'
// Negative zeta arguments are barred entries: z(2,-10) = zeta(2, 10bar).
struct Expr {
    enum class Kind { number, zeta, word, sum, product };
    Kind kind = Kind::number;
    Rational value;                              // number
    Index index;                                 // zeta
    Word word;                                   // word
    std::vector<std::pair<int, Expr>> terms;     // sum (sign, term)
    std::vector<Expr> factors;                   // product

    friend bool operator==(const Expr& a, const Expr& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::number: return a.value == b.value;
            case Kind::zeta: return a.index == b.index;
            case Kind::word: return a.word == b.word;
            case Kind::sum: return a.terms == b.terms;
            case Kind::product: return a.factors == b.factors;
        }
        return false;
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int parse_uint() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        Int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }
    long parse_int() {
        skip_ws();
        bool neg = eat('-');
        std::size_t at = pos_;
        Int v = parse_uint();
        if (v > 1000000) throw ParseError(at, "argument out of range");
        return neg ? -static_cast<long>(v.convert_to<long>()) : v.convert_to<long>();
    }

    Expr parse_expr() {
        Expr sum;
        sum.kind = Expr::Kind::sum;
        int sign = eat('-') ? -1 : 1;
        sum.terms.emplace_back(sign, parse_term());
        for (;;) {
            if (eat('+'))
                sign = 1;
            else if (eat('-'))
                sign = -1;
            else
                break;
            sum.terms.emplace_back(sign, parse_term());
        }
        if (sum.terms.size() == 1 && sum.terms[0].first == 1) return std::move(sum.terms[0].second);
        return sum;
    }

    Expr parse_term() {
        Expr prod;
        prod.kind = Expr::Kind::product;
        prod.factors.push_back(parse_factor());
        while (eat('*')) prod.factors.push_back(parse_factor());
        if (prod.factors.size() == 1) return std::move(prod.factors[0]);
        return prod;
    }

    Expr parse_factor() {
        skip_ws();
        if (pos_ >= s_.size()) fail("expected a factor");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expr e;
            e.kind = Expr::Kind::number;
            Int num = parse_uint();
            if (eat('/')) {
                std::size_t at = pos_;
                Int den = parse_uint();
                if (den == 0) throw ParseError(at, "zero denominator");
                e.value = Rational(num, den);
            } else {
                e.value = Rational(num);
            }
            return e;
        }
        if (c == 'z') {
            ++pos_;
            bool reg = pos_ < s_.size() && s_[pos_] == 'r';
            if (reg) ++pos_;
            expect('(');
            Expr e;
            e.kind = Expr::Kind::zeta;
            int k0 = 0;
            if (reg) {
                std::size_t at = pos_;
                Int v = parse_uint();
                if (v > 1000000) throw ParseError(at, "k0 out of range");
                k0 = static_cast<int>(v.convert_to<long>());
                expect(';');
            }
            std::vector<int> signed_ks;
            for (;;) {
                std::size_t at = pos_;
                skip_ws();
                at = pos_;
                long v = parse_int();
                if (v == 0) throw ParseError(at, "zeta argument must be nonzero");
                signed_ks.push_back(static_cast<int>(v));
                if (eat(',')) continue;
                break;
            }
            expect(')');
            e.index = Index::from_signed(signed_ks, k0);
            return e;
        }
        if (c == 'I') {
            ++pos_;
            expect('(');
            Expr e;
            e.kind = Expr::Kind::word;
            std::vector<Letter> ls;
            for (;;) {
                skip_ws();
                std::size_t at = pos_;
                long v = parse_int();
                if (v != 0 && v != 1 && v != -1) throw ParseError(at, "letter must be 0, 1 or -1");
                ls.push_back(letter_from_value(static_cast<int>(v)));
                if (eat(',')) continue;
                break;
            }
            expect(')');
            e.word = Word(std::move(ls));
            return e;
        }
        fail("expected a factor");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view text) { return detail::Parser(text).parse(); }

inline std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number: return to_string(e.value);
        case Expr::Kind::zeta: return index_key(e.index);
        case Expr::Kind::word: return to_string(e.word);
        case Expr::Kind::product: {
            std::string s;
            for (std::size_t i = 0; i < e.factors.size(); ++i) {
                if (i) s += "*";
                bool paren = e.factors[i].kind == Expr::Kind::sum;
                s += paren ? "(" + print(e.factors[i]) + ")" : print(e.factors[i]);
            }
            return s;
        }
        case Expr::Kind::sum: {
            std::string s;
            for (std::size_t i = 0; i < e.terms.size(); ++i) {
                const auto& [sign, t] = e.terms[i];
                if (i == 0)
                    s += sign < 0 ? "-" : "";
                else
                    s += sign < 0 ? " - " : " + ";
                bool paren = t.kind == Expr::Kind::sum;
                s += paren ? "(" + print(t) + ")" : print(t);
            }
            return s;
        }
    }
    return {};
}

// Value of the expression; zeta calls and word literals take their shuffle-
// regularized values.
inline Ball eval_expr(const Expr& e, Precision p, ConstantCache* cache = nullptr) {
    switch (e.kind) {
        case Expr::Kind::number: return Ball::from_rational(e.value, p.working_bits());
        case Expr::Kind::zeta: return eval_index(e.index, p, cache);
        case Expr::Kind::word: {
            Index ix = word_to_index(e.word);
            Ball v = eval_index(ix, p, cache);
            return ix.depth() % 2 == 0 ? v : -v;
        }
        case Expr::Kind::sum: {
            Ball b(p.working_bits());
            for (const auto& [sign, t] : e.terms) {
                Ball v = eval_expr(t, p, cache);
                b += sign < 0 ? -v : v;
            }
            return b;
        }
        case Expr::Kind::product: {
            Ball b = Ball::from_long(1, p.working_bits());
            for (const auto& f : e.factors) b *= eval_expr(f, p, cache);
            return b;
        }
    }
    throw std::logic_error("bad expression node");
}

// Lowers to the motivic word-product basis: z(...) maps to (-1)^depth times
// its integral word, I(...) to the bare word.
inline LinComb<WordProduct> expr_to_word_products(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::number:
            return LinComb<WordProduct>::single(WordProduct{}, e.value);
        case Expr::Kind::zeta: {
            auto [sign, w] = index_to_word(e.index);
            return LinComb<WordProduct>::single(WordProduct({w}), Rational(sign));
        }
        case Expr::Kind::word:
            return LinComb<WordProduct>::unit(WordProduct({e.word}));
        case Expr::Kind::sum: {
            LinComb<WordProduct> out;
            for (const auto& [sign, t] : e.terms) {
                auto c = expr_to_word_products(t);
                if (sign < 0) c *= Rational(-1);
                out += c;
            }
            return out;
        }
        case Expr::Kind::product: {
            LinComb<WordProduct> out = LinComb<WordProduct>::unit(WordProduct{});
            for (const auto& f : e.factors) {
                LinComb<WordProduct> next;
                auto fc = expr_to_word_products(f);
                for (const auto& [wa, qa] : out.terms())
                    for (const auto& [wb, qb] : fc.terms()) {
                        std::vector<Word> ws = wa.words;
                        ws.insert(ws.end(), wb.words.begin(), wb.words.end());
                        next.add(WordProduct(std::move(ws)), qa * qb);
                    }
                out = std::move(next);
            }
            return out;
        }
    }
    throw std::logic_error("bad expression node");
}

}  // namespace mzv
