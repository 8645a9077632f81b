#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

// A letter of the iterated-integral alphabet {0, +1, -1}.
// Canonical sort order is 0 < +1 < -1.
enum class Letter : std::int8_t { zero = 0, plus = 1, minus = -1 };

inline int letter_value(Letter a) { return static_cast<int>(a); }

inline int letter_rank(Letter a) {
    switch (a) {
        case Letter::zero: return 0;
        case Letter::plus: return 1;
        case Letter::minus: return 2;
    }
    throw std::logic_error("bad letter");
}

inline Letter letter_from_value(int v) {
    switch (v) {
        case 0: return Letter::zero;
        case 1: return Letter::plus;
        case -1: return Letter::minus;
    }
    throw std::invalid_argument("letter must be 0, 1 or -1");
}

// t -> 1-t on letters: 0 -> 1, 1 -> 0; -1 maps outside the alphabet (to 2),
// so the reflected value is exposed as an int only (see eval internals).
inline int letter_reflect_value(Letter a) { return 1 - letter_value(a); }

inline std::string letter_str(Letter a) { return std::to_string(letter_value(a)); }

// A word between the implicit endpoints 0 and 1.  The empty word is the
// weight-0 integral, with value 1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}
    Word(std::initializer_list<int> vs) {
        letters_.reserve(vs.size());
        for (int v : vs) letters_.push_back(letter_from_value(v));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t weight() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter front() const { return letters_.front(); }
    Letter back() const { return letters_.back(); }

    Word prefix(std::size_t n) const {
        return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
    }
    Word suffix_from(std::size_t n) const {
        return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
    }
    Word prepend(Letter a) const {
        std::vector<Letter> ls;
        ls.reserve(letters_.size() + 1);
        ls.push_back(a);
        ls.insert(ls.end(), letters_.begin(), letters_.end());
        return Word(std::move(ls));
    }
    Word append(Letter a) const {
        std::vector<Letter> ls = letters_;
        ls.push_back(a);
        return Word(std::move(ls));
    }
    Word insert_at(std::size_t pos, Letter a) const {
        std::vector<Letter> ls = letters_;
        ls.insert(ls.begin() + pos, a);
        return Word(std::move(ls));
    }
    Word erase_at(std::size_t pos) const {
        std::vector<Letter> ls = letters_;
        ls.erase(ls.begin() + pos);
        return Word(std::move(ls));
    }

    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        const auto& x = a.letters_;
        const auto& y = b.letters_;
        std::size_t n = std::min(x.size(), y.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = letter_rank(x[i]) - letter_rank(y[i]);
            if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return x.size() <=> y.size();
    }

private:
    std::vector<Letter> letters_;
};

// Convergent iff empty, or first letter != 0 and last letter != +1.
inline bool is_convergent(const Word& w) {
    if (w.empty()) return true;
    return w.front() != Letter::zero && w.back() != Letter::plus;
}

inline std::string to_string(const Word& w) {
    std::string s = "I(";
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) s += ",";
        s += letter_str(w.letters()[i]);
    }
    s += ")";
    return s;
}

// A word with explicit endpoints in {0, +1, -1}; used for motivic left
// factors, where endpoints range over the alphabet.
struct GeneralWord {
    Letter lower = Letter::zero;
    std::vector<Letter> letters;
    Letter upper = Letter::plus;

    std::size_t weight() const { return letters.size(); }

    friend bool operator==(const GeneralWord&, const GeneralWord&) = default;
    friend std::strong_ordering operator<=>(const GeneralWord& a, const GeneralWord& b) {
        if (int c = letter_rank(a.lower) - letter_rank(b.lower); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        Word wa{std::vector<Letter>(a.letters)}, wb{std::vector<Letter>(b.letters)};
        if (auto c = wa <=> wb; c != 0) return c;
        int c = letter_rank(a.upper) - letter_rank(b.upper);
        return c < 0    ? std::strong_ordering::less
               : c == 0 ? std::strong_ordering::equal
                        : std::strong_ordering::greater;
    }
};

inline std::string to_string(const GeneralWord& g) {
    std::string s = "I(" + letter_str(g.lower) + ";";
    for (std::size_t i = 0; i < g.letters.size(); ++i) {
        if (i) s += ",";
        s += letter_str(g.letters[i]);
    }
    s += ";" + letter_str(g.upper) + ")";
    return s;
}

}  // namespace mzv
