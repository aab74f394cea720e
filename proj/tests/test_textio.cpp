#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "mzvh/textio.hpp"

using namespace mzvh;

namespace {

Word W(const std::string& compact) {
    std::vector<Letter> ls;
    for (char c : compact)
        ls.push_back(c == '0' ? Letter::E0 : c == '1' ? Letter::E1 : Letter::EZ);
    return Word(std::move(ls));
}

Expr E(const std::string& compact) { return Expr::from_word(W(compact)); }

std::mt19937 rng(771177);

Word random_word(std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> alpha(0, 2);
    std::vector<Letter> ls(len(rng));
    for (auto& l : ls) l = static_cast<Letter>(alpha(rng));
    return Word(std::move(ls));
}

}  // namespace

TEST_CASE("parse_word accepts both token and compact forms") {
    CHECK(parse_word("e1 e0 ez") == W("10z"));
    CHECK(parse_word("10z0") == W("10z0"));
    CHECK(parse_word("  1 0 z\t0 ") == W("10z0"));
    CHECK(parse_word("") == Word());
    CHECK(parse_word("z") == W("z"));
}

TEST_CASE("parse_word reports position and expectation") {
    CHECK_THROWS_AS(parse_word("e2"), parse_error);
    try {
        parse_word("e1 e2");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
        CHECK(e.expected == "e0, e1, or ez");
    }
    CHECK_THROWS_AS(parse_word("e1e0"), parse_error);  // tokens need whitespace
    CHECK_THROWS_AS(parse_word("x"), parse_error);
}

TEST_CASE("parse_index expands the repetition macro") {
    CHECK(parse_index("3,1,2") == MzvIndex{3, 1, 2});
    CHECK(parse_index("3,{2}^2,1,2") == MzvIndex{3, 2, 2, 1, 2});
    CHECK(parse_index("{2}^0,3") == MzvIndex{3});
    CHECK(parse_index("") == MzvIndex());
    CHECK(parse_index(" {3}^3 ") == MzvIndex{3, 3, 3});
    CHECK_THROWS_AS(parse_index("3,0,2"), parse_error);
    CHECK_THROWS_AS(parse_index("3,,2"), parse_error);
    CHECK_THROWS_AS(parse_index("{2}^"), parse_error);
    CHECK_THROWS_AS(parse_index("2 3"), parse_error);
}

TEST_CASE("parse_expr: stated examples") {
    CHECK(parse_expr("A(1) Bb(0) ez A(0) - B(1) ez A(0)") ==
          E("100z") - E("101z"));
    CHECK(parse_expr("Fee(1,0,0)") == F(FamilyKind::ee, FParams{1, 0, 0}));
    CHECK_THROWS_AS(parse_expr("2*e1e0"), parse_error);
    CHECK(parse_expr("2* e1 e0") == Rational(2) * E("10"));
}

TEST_CASE("parse_expr: coefficients, empty-word terms, signs") {
    CHECK(parse_expr("0").is_zero());
    CHECK(parse_expr("3") == Rational(3) * Expr::one());
    CHECK(parse_expr("- 1") == Rational(-1) * Expr::one());
    CHECK(parse_expr("1/2*ez + 1/2*ez") == E("z"));
    CHECK(parse_expr("e1 e0 - e1 e0").is_zero());
    CHECK(parse_expr("-e1 + e1 e0") == E("10") - E("1"));
    CHECK(parse_expr("Foe(1,-1,0)").is_zero());
    CHECK_THROWS_AS(parse_expr("A(-1)"), negative_index);
    CHECK_THROWS_AS(parse_expr("Fee(0,0,0)"), bad_s);
    CHECK_THROWS_AS(parse_expr("Q(1)"), parse_error);
    CHECK_THROWS_AS(parse_expr("2 e1"), parse_error);
    CHECK_THROWS_AS(parse_expr("1/0*e1"), parse_error);
    CHECK_THROWS_AS(parse_expr(""), parse_error);
    CHECK_THROWS_AS(parse_expr("e1 +"), parse_error);
}

TEST_CASE("format_word / parse_word round trip") {
    CHECK(format_word(W("10z")) == "e1 e0 ez");
    CHECK(format_word(Word()).empty());
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = random_word(9);
        CHECK(parse_word(format_word(w)) == w);
    }
}

TEST_CASE("format_index and the packed macro form") {
    CHECK(format_index(MzvIndex{3, 1, 2}) == "3,1,2");
    CHECK(format_index(MzvIndex()).empty());
    CHECK(format_index_packed(MzvIndex{2, 2, 2}) == "{2}^3");
    CHECK(format_index_packed(MzvIndex{3, 2, 1, 2}) == "3,2,1,2");
    CHECK(format_index_packed(MzvIndex{3, 2, 2, 1, 2}) == "3,{2}^2,1,2");
    CHECK(format_index_packed(MzvIndex{2, 2, 3, 2, 2, 2}) == "{2}^2,3,{2}^3");

    std::uniform_int_distribution<int> part(1, 4);
    std::uniform_int_distribution<std::size_t> len(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> parts(len(rng));
        for (auto& p : parts) p = part(rng);
        const MzvIndex k(std::move(parts));
        CHECK(parse_index(format_index(k)) == k);
        CHECK(parse_index(format_index_packed(k)) == k);
    }
}

TEST_CASE("format_expr / parse_expr round trip") {
    CHECK(format_expr(Expr::zero()) == "0");
    CHECK(format_expr(E("100z") - E("101z")) == "e1 e0 e0 ez - e1 e0 e1 ez");
    CHECK(format_expr(Rational(-1) * Expr::one()) == "- 1");
    CHECK(format_expr(Rational(5, 2) * E("10")) == "5/2*e1 e0");

    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<std::size_t> terms(0, 20);
    for (int trial = 0; trial < 200; ++trial) {
        Expr e;
        const std::size_t n = terms(rng);
        for (std::size_t i = 0; i < n; ++i)
            e.add_term(Rational(num(rng), den(rng)), random_word(6));
        CHECK(parse_expr(format_expr(e)) == e);
    }
}

TEST_CASE("identity formatting singles out a unit positive term") {
    CHECK(format_identity(theorem_identity(1, 1, 0)) ==
          "zeta(3,1,2) = zeta({2}^3) + 2*zeta(3,3)");
    CHECK(format_identity(theorem_identity(1, 1, 2)) ==
          "zeta(3,{2}^2,1,2) = zeta({2}^5) + 2*zeta(3,3,{2}^2)");
    CHECK(format_identity(theorem_identity(2, 1, 0)) ==
          "zeta(2,3,1,2) = zeta({2}^4) + zeta(3,2,3) + zeta(2,3,3)");

    const Identity plain({{Rational(2), MzvIndex{3}}, {Rational(-2), MzvIndex{1, 2}}});
    CHECK(format_identity(plain) == "2*zeta(3) - 2*zeta(1,2) = 0");
    CHECK(parse_identity(format_identity(plain)) == plain);
}

TEST_CASE("parse_identity round trips and validates") {
    for (int m = 1; m <= 3; ++m)
        for (int s = 1; s <= 3; ++s)
            for (int n = 0; n <= 2; ++n) {
                const Identity id = theorem_identity(m, s, n);
                CHECK(parse_identity(format_identity(id)) == id);
            }
    CHECK_THROWS_AS(parse_identity("zeta(2) = zeta(2) oops"), parse_error);
}

TEST_CASE("parsing is total: arbitrary input yields a value or a typed error") {
    std::uniform_int_distribution<int> ch(32, 126);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    const std::string alphabet = "e01z,{}^*/+-=()AaBbFon 23";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 3000; ++trial) {
        std::string s(len(rng), ' ');
        for (auto& c : s)
            c = trial % 2 ? alphabet[pick(rng)] : static_cast<char>(ch(rng));
        try {
            (void)parse_word(s);
        } catch (const parse_error&) {
        }
        try {
            (void)parse_index(s);
        } catch (const parse_error&) {
        }
        try {
            (void)parse_expr(s);
        } catch (const parse_error&) {
        } catch (const bad_s&) {
        } catch (const negative_index&) {
        }
        try {
            (void)parse_identity(s);
        } catch (const parse_error&) {
        } catch (const bad_params&) {
        } catch (const inadmissible_input&) {
        }
    }
    SUCCEED("no unexpected exception or crash");
}

TEST_CASE("parse_identity syntax") {
    const Identity hoffman = parse_identity(
        "zeta(3,1,2) = zeta({2}^3) + 2*zeta(3,3)");
    CHECK(hoffman == theorem_identity(1, 1, 0));

    const Identity flat = parse_identity("zeta(3,1,2) - zeta({2}^3) - 2*zeta(3,3)");
    CHECK(flat == hoffman);

    CHECK(parse_identity("zeta(2) - zeta(2) + zeta(2) = 0").weight() == 2);
    CHECK(parse_identity("zeta(2) - zeta(2)").canonical_terms().empty());
    CHECK_THROWS_AS(parse_identity("0"), bad_params);
    CHECK_THROWS_AS(parse_identity("zeta(2,1)"), inadmissible_input);
    CHECK_THROWS_AS(parse_identity("zeta(2) + zeta(3)"), bad_params);
    CHECK_THROWS_AS(parse_identity("zita(2)"), parse_error);
    CHECK_THROWS_AS(parse_identity("zeta(2"), parse_error);
    CHECK_THROWS_AS(parse_identity("0*zeta(2)"), parse_error);
    CHECK_THROWS_AS(parse_identity("zeta(3,x)"), parse_error);
}
