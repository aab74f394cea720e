#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "mzvh/mzv_bridge.hpp"

using namespace mzvh;

namespace {

Word W(const std::string& compact) {
    std::vector<Letter> ls;
    for (char c : compact)
        ls.push_back(c == '0' ? Letter::E0 : c == '1' ? Letter::E1 : Letter::EZ);
    return Word(std::move(ls));
}

// all admissible indices (last part >= 2) of the given weight
void admissible_indices_of_weight(int weight, std::vector<int>& cur,
                                  std::vector<MzvIndex>& out) {
    if (weight == 0) {
        if (cur.empty() || cur.back() >= 2) out.emplace_back(cur);
        return;
    }
    for (int k = 1; k <= weight; ++k) {
        cur.push_back(k);
        admissible_indices_of_weight(weight - k, cur, out);
        cur.pop_back();
    }
}

std::vector<MzvIndex> admissible_indices_up_to(int max_weight) {
    std::vector<MzvIndex> out;
    std::vector<int> cur;
    for (int w = 0; w <= max_weight; ++w)
        admissible_indices_of_weight(w, cur, out);
    return out;
}

}  // namespace

TEST_CASE("word_to_index: stated examples") {
    {
        const auto [k, sign] = word_to_index(W("10"));
        CHECK(k == MzvIndex{2});
        CHECK(sign == -1);
    }
    {
        const auto [k, sign] = word_to_index(W("10100"));
        CHECK(k == MzvIndex{2, 3});
        CHECK(sign == +1);
    }
    {
        const auto [k, sign] = word_to_index(Word());
        CHECK(k == MzvIndex());
        CHECK(sign == +1);
    }
}

TEST_CASE("word_to_index rejects non-MZV words") {
    CHECK_THROWS_AS(word_to_index(W("1z0")), not_mzv_word);
    CHECK_THROWS_AS(word_to_index(W("010")), not_mzv_word);  // starts with e0
    CHECK_THROWS_AS(word_to_index(W("101")), not_mzv_word);  // inadmissible
}

TEST_CASE("index_to_word: stated examples") {
    CHECK(index_to_word(MzvIndex{3}) == W("100"));
    CHECK(index_to_word(MzvIndex{2, 2}) == W("1010"));
    CHECK(index_to_word(MzvIndex{1, 2}) == W("110"));
    CHECK_THROWS_AS(index_to_word(MzvIndex{2, 1}), inadmissible_input);
}

TEST_CASE("round trips on all admissible indices of weight <= 12") {
    for (const MzvIndex& k : admissible_indices_up_to(12)) {
        const Word w = index_to_word(k);
        const auto [back, sign] = word_to_index(w);
        CHECK(back == k);
        CHECK(sign == (k.depth() % 2 ? -1 : +1));
        if (!w.empty()) {
            CHECK(is_admissible(w));
            CHECK(static_cast<int>(w.length()) == k.weight());
            CHECK(w.depth() == k.depth());
        }
    }
}

TEST_CASE("dual_index: stated examples") {
    CHECK(dual_index(MzvIndex{3}) == MzvIndex{1, 2});
    CHECK(dual_index(MzvIndex{2}) == MzvIndex{2});
    CHECK(dual_index(MzvIndex{2, 2}) == MzvIndex{2, 2});
    CHECK_THROWS_AS(dual_index(MzvIndex()), inadmissible_input);
}

TEST_CASE("dual_index is a weight-preserving involution, weight <= 12") {
    for (const MzvIndex& k : admissible_indices_up_to(12)) {
        if (k.depth() == 0) continue;
        const MzvIndex d = dual_index(k);
        CHECK(d.admissible());
        CHECK(d.weight() == k.weight());
        CHECK(d.depth() == static_cast<std::size_t>(k.weight()) - k.depth());
        CHECK(dual_index(d) == k);
    }
}

TEST_CASE("theorem_identity: Hoffman instance at n = 0") {
    const Identity id = theorem_identity(1, 1, 0);
    const Identity expected({{Rational(1), MzvIndex{3, 1, 2}},
                             {Rational(-1), MzvIndex{2, 2, 2}},
                             {Rational(-2), MzvIndex{3, 3}}});
    CHECK(id == expected);
}

TEST_CASE("theorem_identity: Hoffman instance at n = 2") {
    const Identity id = theorem_identity(1, 1, 2);
    const Identity expected({{Rational(1), MzvIndex{3, 2, 2, 1, 2}},
                             {Rational(-1), MzvIndex{2, 2, 2, 2, 2}},
                             {Rational(-2), MzvIndex{3, 3, 2, 2}}});
    CHECK(id == expected);
}

TEST_CASE("theorem_identity: asymmetric instance m=2, s=1, n=0") {
    const Identity id = theorem_identity(2, 1, 0);
    const Identity expected({{Rational(1), MzvIndex{2, 3, 1, 2}},
                             {Rational(-1), MzvIndex{2, 2, 2, 2}},
                             {Rational(-1), MzvIndex{3, 2, 3}},
                             {Rational(-1), MzvIndex{2, 3, 3}}});
    CHECK(id == expected);
}

TEST_CASE("theorem_identity: weights and parameter validation") {
    for (int m = 1; m <= 3; ++m)
        for (int s = 1; s <= 3; ++s)
            for (int n = 0; n <= 3; ++n) {
                const Identity id = theorem_identity(m, s, n);
                CHECK(id.weight() == 2 * (m + n + s) + 2);
                for (const auto& [c, k] : id.terms()) CHECK(k.admissible());
            }
    CHECK_THROWS_AS(theorem_identity(0, 1, 0), bad_params);
    CHECK_THROWS_AS(theorem_identity(1, 0, 0), bad_params);
    CHECK_THROWS_AS(theorem_identity(1, 1, -1), bad_params);
}

TEST_CASE("expr_to_identity: single word and duality instance") {
    {
        const Identity id = expr_to_identity(Expr::from_word(W("10")));
        const Identity expected({{Rational(-1), MzvIndex{2}}});
        CHECK(id == expected);
    }
    {
        // delta(e1 e0 e0) translates to zeta(1,2) - zeta(3), Euler's identity
        const Identity id = expr_to_identity(delta(Expr::from_word(W("100"))));
        const Identity expected(
            {{Rational(-1), MzvIndex{3}}, {Rational(1), MzvIndex{1, 2}}});
        CHECK(id == expected);
    }
    CHECK_THROWS_AS(expr_to_identity(Expr::from_word(W("1z"))), not_mzv_word);
}

TEST_CASE("limit target translates to the theorem up to the global sign") {
    // L-dictionary signs make the translated target equal
    // (-1)^{s+m+n+1} * theorem_identity(m,s,n).
    for (int m = 1; m <= 3; ++m)
        for (int s = 1; s <= 3; ++s)
            for (int n = 0; n <= 3; ++n) {
                const Identity from_words =
                    expr_to_identity(limit_target(FParams{s, m, n}));
                const Rational sign = (s + m + n + 1) % 2 == 0 ? 1 : -1;
                CHECK(from_words == sign * theorem_identity(m, s, n));
            }
}

TEST_CASE("Identity validates its invariants") {
    CHECK_THROWS_AS(Identity(std::vector<Identity::Term>{}), bad_params);
    CHECK_THROWS_AS(Identity({{Rational(1), MzvIndex{2}},
                              {Rational(-1), MzvIndex{3}}}),
                    bad_params);  // mixed weight
    CHECK_THROWS_AS(Identity({{Rational(1), MzvIndex{2, 1}}}),
                    inadmissible_input);
    CHECK_THROWS_AS(Identity({{Rational(0), MzvIndex{2}}}), bad_params);

    // a stored pair may still merge to nothing canonically
    const Identity trivial({{Rational(1), MzvIndex{2}},
                            {Rational(-1), MzvIndex{2}}});
    CHECK(trivial.canonical_terms().empty());
    CHECK(trivial.terms().size() == 2);
}
