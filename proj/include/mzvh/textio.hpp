#pragma once

/// Text conventions for words, indices, expressions and identities.
/// All CLI input goes through these parsers; formatters round-trip.
///
/// word   := (e-token | compact-chunk)*        e-token := 'e0'|'e1'|'ez'
///           compact-chunk := ('0'|'1'|'z')+   tokens separated by whitespace
/// index  := [ item (',' item)* ]              item := uint | '{' uint '}' '^' uint
/// expr   := ['+'|'-'] term (('+'|'-') term)*
/// term   := int | [int '*'] factor+
/// factor := 'e0' | 'e1' | 'ez' | 'A(' n ')' | 'B(' n ')' | 'Ab(' n ')'
///         | 'Bb(' n ')' | ('Fee'|'Foe'|'Feo'|'Foo') '(' s ',' m ',' n ')'
/// int    := digits [ '/' digits ]             (nonnegative; signs join terms)
/// ident  := side [ '=' side ]                 side := ['-'] iterm (('+'|'-') iterm)*
/// iterm  := [int '*'] 'zeta' '(' index ')' | '0'
///
/// Juxtaposed factors concatenate. A bare integer term is a multiple of the
/// empty word. "Ab"/"Bb" are the ASCII names of the barred blocks.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "mzvh/families.hpp"
#include "mzvh/mzv_bridge.hpp"
#include "mzvh/word_algebra.hpp"

namespace mzvh {

namespace textio_detail {

class Scanner {
public:
    explicit Scanner(std::string_view src) : src_(src) {}

    std::size_t pos() const { return pos_; }
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return eof() ? '\0' : src_[pos_]; }
    char take() { return src_[pos_++]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw parse_error(pos_, what);
    }

    [[noreturn]] void fail(const char* expected) const {
        throw parse_error(pos_, expected);
    }

    long parse_uint(const char* what, long max_value) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(what);
        const std::size_t at = pos_;
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (take() - '0');
            if (v > max_value) throw parse_error(at, "a smaller number");
        }
        return v;
    }

    long parse_int(const char* what, long max_abs) {
        skip_ws();
        bool neg = accept('-');
        long v = parse_uint(what, max_abs);
        return neg ? -v : v;
    }

    // digits ['/' digits], nonnegative
    Rational parse_rational() {
        const long num = parse_uint("a coefficient", 1000000000L);
        if (accept('/')) {
            const std::size_t at = pos_;
            const long den = parse_uint("a denominator", 1000000000L);
            if (den == 0) throw parse_error(at, "a nonzero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    bool at_digit() const {
        return std::isdigit(static_cast<unsigned char>(peek()));
    }
    bool at_alpha() const {
        return std::isalpha(static_cast<unsigned char>(peek()));
    }

    std::string parse_ident() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek()))) s += take();
        return s;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace textio_detail

inline Word parse_word(std::string_view text) {
    textio_detail::Scanner sc(text);
    std::vector<Letter> ls;
    for (;;) {
        sc.skip_ws();
        if (sc.eof()) break;
        const char c = sc.peek();
        if (c == 'e') {
            sc.take();
            switch (sc.peek()) {
                case '0': sc.take(); ls.push_back(Letter::E0); break;
                case '1': sc.take(); ls.push_back(Letter::E1); break;
                case 'z': sc.take(); ls.push_back(Letter::EZ); break;
                default: sc.fail("e0, e1, or ez");
            }
            if (!sc.eof() && !std::isspace(static_cast<unsigned char>(sc.peek())))
                sc.fail("whitespace between letter tokens");
        } else if (c == '0') {
            sc.take();
            ls.push_back(Letter::E0);
        } else if (c == '1') {
            sc.take();
            ls.push_back(Letter::E1);
        } else if (c == 'z') {
            sc.take();
            ls.push_back(Letter::EZ);
        } else {
            sc.fail("e0, e1, ez, or a compact 0/1/z chunk");
        }
    }
    return Word(std::move(ls));
}

/// Admissibility is not checked here; use-sites decide.
inline MzvIndex parse_index(std::string_view text) {
    textio_detail::Scanner sc(text);
    std::vector<int> parts;
    sc.skip_ws();
    if (sc.eof()) return MzvIndex();
    for (;;) {
        sc.skip_ws();
        if (sc.accept('{')) {
            const std::size_t at = sc.pos();
            const long k = sc.parse_uint("an exponent >= 1", 1000000L);
            if (k < 1) throw parse_error(at, "an exponent >= 1");
            sc.skip_ws();
            sc.expect('}', "'}'");
            sc.skip_ws();
            sc.expect('^', "'^'");
            const long rep = sc.parse_uint("a repetition count", 10000L);
            for (long i = 0; i < rep; ++i) parts.push_back(static_cast<int>(k));
        } else {
            const std::size_t at = sc.pos();
            const long k = sc.parse_uint("an exponent >= 1", 1000000L);
            if (k < 1) throw parse_error(at, "an exponent >= 1");
            parts.push_back(static_cast<int>(k));
        }
        sc.skip_ws();
        if (!sc.accept(',')) break;
    }
    sc.skip_ws();
    if (!sc.eof()) sc.fail("',' or end of input");
    return MzvIndex(std::move(parts));
}

namespace textio_detail {

inline Expr parse_factor(Scanner& sc) {
    const std::size_t at = sc.pos();
    const std::string name = sc.parse_ident();
    if (name == "e0") return Expr::from_word(Word({Letter::E0}));
    if (name == "e1") return Expr::from_word(Word({Letter::E1}));
    if (name == "ez") return Expr::from_word(Word({Letter::EZ}));
    if (name == "A" || name == "B" || name == "Ab" || name == "Bb") {
        sc.skip_ws();
        sc.expect('(', "'('");
        const long n = sc.parse_int("a block index", 1000L);
        sc.skip_ws();
        sc.expect(')', "')'");
        const Block b = name == "A"    ? Block::A
                        : name == "B"  ? Block::B
                        : name == "Ab" ? Block::Abar
                                       : Block::Bbar;
        return Expr::from_word(family_word(b, static_cast<int>(n)));
    }
    if (name == "Fee" || name == "Foe" || name == "Feo" || name == "Foo") {
        sc.skip_ws();
        sc.expect('(', "'('");
        const long s = sc.parse_int("s", 1000L);
        sc.skip_ws();
        sc.expect(',', "','");
        const long m = sc.parse_int("m", 1000L);
        sc.skip_ws();
        sc.expect(',', "','");
        const long n = sc.parse_int("n", 1000L);
        sc.skip_ws();
        sc.expect(')', "')'");
        const FamilyKind k = name == "Fee"   ? FamilyKind::ee
                             : name == "Foe" ? FamilyKind::oe
                             : name == "Feo" ? FamilyKind::eo
                                             : FamilyKind::oo;
        return F(k, FParams{static_cast<int>(s), static_cast<int>(m),
                            static_cast<int>(n)});
    }
    throw parse_error(at, "e0, e1, ez, A(n), B(n), Ab(n), Bb(n), or Fxx(s,m,n)");
}

inline Expr parse_term(Scanner& sc) {
    sc.skip_ws();
    Rational coeff(1);
    bool have_coeff = false;
    if (sc.at_digit()) {
        coeff = sc.parse_rational();
        have_coeff = true;
        sc.skip_ws();
        if (!sc.accept('*')) return Expr::from_term(coeff, Word());
        sc.skip_ws();
    }
    if (!sc.at_alpha()) {
        sc.fail(have_coeff ? "a factor after '*'" : "a coefficient or factor");
    }
    Expr prod = Expr::from_term(coeff, Word());
    while (true) {
        prod = prod * parse_factor(sc);
        sc.skip_ws();
        if (!sc.at_alpha()) break;
    }
    return prod;
}

}  // namespace textio_detail

inline Expr parse_expr(std::string_view text) {
    textio_detail::Scanner sc(text);
    sc.skip_ws();
    Rational sign(1);
    if (sc.accept('-'))
        sign = -1;
    else
        sc.accept('+');
    Expr e = sign * textio_detail::parse_term(sc);
    for (;;) {
        sc.skip_ws();
        if (sc.eof()) break;
        if (sc.accept('-'))
            sign = -1;
        else if (sc.accept('+'))
            sign = 1;
        else
            sc.fail("'+', '-', or end of input");
        e += sign * textio_detail::parse_term(sc);
    }
    return e;
}

inline std::string format_word(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) s += ' ';
        s += letter_name(w[i]);
    }
    return s;
}

inline std::string format_index(const MzvIndex& k) {
    std::string s;
    for (std::size_t i = 0; i < k.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(k.parts()[i]);
    }
    return s;
}

/// Index with maximal runs of two or more 2s packed as {2}^r.
inline std::string format_index_packed(const MzvIndex& k) {
    const auto& parts = k.parts();
    std::string s;
    std::size_t i = 0;
    while (i < parts.size()) {
        if (!s.empty()) s += ',';
        if (parts[i] == 2) {
            std::size_t run = 1;
            while (i + run < parts.size() && parts[i + run] == 2) ++run;
            if (run >= 2) {
                s += "{2}^" + std::to_string(run);
                i += run;
                continue;
            }
        }
        s += std::to_string(parts[i]);
        ++i;
    }
    return s;
}

inline std::string format_expr(const Expr& x) {
    if (x.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : x) {
        const bool neg = c < 0;
        if (first)
            s += neg ? "- " : "";
        else
            s += neg ? " - " : " + ";
        const Rational mag = neg ? Rational(-c) : c;
        if (w.empty()) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str() + "*";
            s += format_word(w);
        }
        first = false;
    }
    return s;
}

inline std::string format_identity(const Identity& id) {
    const auto& terms = id.terms();
    std::size_t positive = 0, lead = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].first > 0) {
            ++positive;
            lead = i;
        }
    }
    const auto term_text = [](const Rational& c, const MzvIndex& k) {
        std::string s;
        if (c != 1) s += c.str() + "*";
        s += "zeta(" + format_index_packed(k) + ")";
        return s;
    };
    if (positive == 1 && terms[lead].first == 1 && terms.size() > 1) {
        std::string s = term_text(Rational(1), terms[lead].second) + " = ";
        bool first = true;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i == lead) continue;
            if (!first) s += " + ";
            s += term_text(-terms[i].first, terms[i].second);
            first = false;
        }
        return s;
    }
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [c, k] = terms[i];
        if (i == 0) {
            s += c < 0 ? "- " : "";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        s += term_text(c < 0 ? Rational(-c) : c, k);
    }
    return s + " = 0";
}

inline Identity parse_identity(std::string_view text) {
    textio_detail::Scanner sc(text);
    std::vector<Identity::Term> terms;

    const auto parse_side = [&](const Rational& side_sign) {
        Rational sign = side_sign;
        sc.skip_ws();
        if (sc.accept('-')) sign = -sign;
        for (;;) {
            sc.skip_ws();
            Rational coeff(1);
            if (sc.at_digit()) {
                const std::size_t at = sc.pos();
                coeff = sc.parse_rational();
                sc.skip_ws();
                if (coeff == 0) {
                    // a literal zero term contributes nothing
                    if (sc.accept('*')) throw parse_error(at, "a nonzero coefficient");
                    coeff = 1;
                    goto next;
                }
                sc.expect('*', "'*' before zeta");
                sc.skip_ws();
            }
            {
                const std::size_t at = sc.pos();
                if (sc.parse_ident() != "zeta") throw parse_error(at, "'zeta' or '0'");
            }
            sc.skip_ws();
            sc.expect('(', "'('");
            {
                const std::size_t start = sc.pos();
                std::string body;
                while (!sc.eof() && sc.peek() != ')') body += sc.take();
                sc.expect(')', "')'");
                try {
                    terms.emplace_back(sign * coeff, parse_index(body));
                } catch (const parse_error& e) {
                    throw parse_error(start + e.offset, e.expected);
                }
            }
        next:
            sc.skip_ws();
            if (sc.accept('+'))
                sign = side_sign;
            else if (sc.accept('-'))
                sign = -side_sign;
            else
                break;
        }
    };

    parse_side(Rational(1));
    sc.skip_ws();
    if (sc.accept('=')) {
        parse_side(Rational(-1));
        sc.skip_ws();
    }
    if (!sc.eof()) sc.fail("'+', '-', '=', or end of input");
    return Identity(std::move(terms));
}

}  // namespace mzvh
