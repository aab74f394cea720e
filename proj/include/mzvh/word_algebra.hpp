#pragma once

/// Exact arithmetic in the free algebra Q<e0,e1,ez>: words, rational linear
/// combinations in canonical form, admissibility, ideal membership, and the
/// sign-twisted reversal tau together with delta(w) = w - tau(w).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mzvh/errors.hpp"

namespace mzvh {

using Rational = boost::multiprecision::cpp_rational;

enum class Letter : std::uint8_t { E0 = 0, E1 = 1, EZ = 2 };

inline const char* letter_name(Letter l) {
    switch (l) {
        case Letter::E0: return "e0";
        case Letter::E1: return "e1";
        case Letter::EZ: return "ez";
    }
    return "?";
}

/// A monomial: finite sequence of letters. Empty word is the algebra unit.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    std::size_t depth() const { return count(Letter::E1); }
    std::size_t ez_count() const { return count(Letter::EZ); }
    bool has_ez() const {
        return std::find(letters_.begin(), letters_.end(), Letter::EZ) != letters_.end();
    }

    friend bool operator==(const Word&, const Word&) = default;

    // length-lexicographic, E0 < E1 < EZ; fixes canonical term order
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Letter> ls;
        ls.reserve(a.letters_.size() + b.letters_.size());
        ls.insert(ls.end(), a.letters_.begin(), a.letters_.end());
        ls.insert(ls.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(ls));
    }

    std::string debug_string() const {
        if (letters_.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) s += ' ';
            s += letter_name(letters_[i]);
        }
        return s;
    }

private:
    std::size_t count(Letter l) const {
        return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
    }

    std::vector<Letter> letters_;
};

/// A finite Q-linear combination of words, stored canonically: no zero
/// coefficients, keys unique, iteration in length-lexicographic word order.
class Expr {
public:
    using TermMap = std::map<Word, Rational>;

    Expr() = default;

    static Expr zero() { return Expr(); }
    static Expr one() { return from_word(Word()); }
    static Expr from_word(Word w) { return from_term(Rational(1), std::move(w)); }
    static Expr from_term(Rational c, Word w) {
        Expr e;
        if (c != 0) e.terms_.emplace(std::move(w), std::move(c));
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    TermMap::const_iterator begin() const { return terms_.begin(); }
    TermMap::const_iterator end() const { return terms_.end(); }

    Rational coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Rational& c, const Word& w) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend bool operator==(const Expr&, const Expr&) = default;

    Expr& operator+=(const Expr& o) {
        for (const auto& [w, c] : o.terms_) add_term(c, w);
        return *this;
    }
    Expr& operator-=(const Expr& o) {
        for (const auto& [w, c] : o.terms_) add_term(-c, w);
        return *this;
    }
    Expr& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [w, coeff] : terms_) coeff *= c;
        }
        return *this;
    }

    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator-(Expr a) {
        for (auto& [w, c] : a.terms_) c = -c;
        return a;
    }
    friend Expr operator*(Expr a, const Rational& c) { return a *= c; }
    friend Expr operator*(const Rational& c, Expr a) { return a *= c; }

    // bilinear extension of word concatenation; the empty word is the unit
    friend Expr operator*(const Expr& a, const Expr& b) {
        Expr r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(ca * cb, wa * wb);
        return r;
    }

    std::string debug_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (first) {
                if (c < 0) s += "- ";
            } else {
                s += c < 0 ? " - " : " + ";
            }
            Rational a = c < 0 ? Rational(-c) : c;
            if (a != 1 || w.empty()) {
                s += a.str();
                if (!w.empty()) s += '*';
            }
            if (!w.empty()) s += w.debug_string();
            first = false;
        }
        return s;
    }

private:
    TermMap terms_;
};

inline Expr normalize(const std::vector<std::pair<Rational, Word>>& raw) {
    Expr e;
    for (const auto& [c, w] : raw) e.add_term(c, w);
    return e;
}

inline Expr concat(const Expr& x, const Expr& y) { return x * y; }

/// Membership in A^1 = Q + Q ez + e1 A e0 + ez A e0 + e1 A ez + ez A ez:
/// empty, single ez, or first letter in {e1,ez} and last in {e0,ez}.
inline bool is_admissible(const Word& w) {
    if (w.empty()) return true;
    if (w.length() == 1) return w[0] == Letter::EZ;
    const Letter first = w[0];
    const Letter last = w[w.length() - 1];
    return (first == Letter::E1 || first == Letter::EZ) &&
           (last == Letter::E0 || last == Letter::EZ);
}

inline bool is_admissible(const Expr& x) {
    for (const auto& [w, c] : x)
        if (!is_admissible(w)) return false;
    return true;
}

/// Membership in the two-sided ideal generated by ez.
inline bool in_ideal(const Word& w) { return w.has_ez(); }

inline bool in_ideal(const Expr& x) {
    for (const auto& [w, c] : x)
        if (!in_ideal(w)) return false;
    return true;
}

/// tau on an ez-free word: reverse, swap e0 <-> e1, sign (-1)^length.
/// Anti-automorphism with tau(e0) = -e1, tau(e1) = -e0.
inline Expr tau(const Expr& x) {
    Expr r;
    for (const auto& [w, c] : x) {
        if (w.has_ez())
            throw ez_not_allowed("tau is undefined on words containing ez: " +
                                 w.debug_string());
        std::vector<Letter> rev(w.length());
        for (std::size_t i = 0; i < w.length(); ++i) {
            const Letter l = w[w.length() - 1 - i];
            rev[i] = l == Letter::E0 ? Letter::E1 : Letter::E0;
        }
        const Rational sign = w.length() % 2 == 0 ? 1 : -1;
        r.add_term(c * sign, Word(std::move(rev)));
    }
    return r;
}

/// delta(x) = x - tau(x); L(delta(w)) = 0 is the duality relation.
inline Expr delta(const Expr& x) { return x - tau(x); }

}  // namespace mzvh
