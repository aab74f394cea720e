#pragma once

/// The word families A_n = (e1 e0)^n, B_n = (e1 e0)^n e1, Ab_n = (e0 e1)^n,
/// Bb_n = (e0 e1)^n e0, the four F-families built from them, and the exact
/// residuals of their derivative recurrences and of the z -> -0 limit.

#include <array>
#include <string>
#include <vector>

#include "mzvh/derivations.hpp"
#include "mzvh/word_algebra.hpp"

namespace mzvh {

enum class Block { A, B, Abar, Bbar };

enum class FamilyKind { ee, oe, eo, oo };

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::ee: return "ee";
        case FamilyKind::oe: return "oe";
        case FamilyKind::eo: return "eo";
        case FamilyKind::oo: return "oo";
    }
    return "?";
}

struct FParams {
    int s = 1;  // >= 1
    int m = 0;  // any sign; F vanishes for m < 0
    int n = 0;  // any sign; F vanishes for n < 0
};

inline Word family_word(Block kind, int n) {
    if (n < 0)
        throw negative_index("family block index must be >= 0, got " +
                             std::to_string(n));
    std::vector<Letter> ls;
    ls.reserve(2 * static_cast<std::size_t>(n) + 1);
    const bool barred = kind == Block::Abar || kind == Block::Bbar;
    const Letter first = barred ? Letter::E0 : Letter::E1;
    const Letter second = barred ? Letter::E1 : Letter::E0;
    for (int i = 0; i < n; ++i) {
        ls.push_back(first);
        ls.push_back(second);
    }
    if (kind == Block::B) ls.push_back(Letter::E1);
    if (kind == Block::Bbar) ls.push_back(Letter::E0);
    return Word(std::move(ls));
}

namespace detail {

inline Word ez_word() { return Word({Letter::EZ}); }

inline Word wA(int n) { return family_word(Block::A, n); }
inline Word wB(int n) { return family_word(Block::B, n); }
inline Word wAb(int n) { return family_word(Block::Abar, n); }
inline Word wBb(int n) { return family_word(Block::Bbar, n); }

}  // namespace detail

/// The five-term (six-word) F combination; zero when m < 0 or n < 0.
inline Expr F(FamilyKind kind, const FParams& p) {
    if (p.s < 1)
        throw bad_s("F requires s >= 1, got " + std::to_string(p.s));
    if (p.m < 0 || p.n < 0) return Expr::zero();

    using namespace detail;
    const int s = p.s, m = p.m, n = p.n;
    const bool left_odd = kind == FamilyKind::oe || kind == FamilyKind::oo;
    const bool right_odd = kind == FamilyKind::eo || kind == FamilyKind::oo;
    const Word ez = ez_word();

    // left-even: A_s Bb_m / A_m / B_{s+m}; left-odd: A_s Ab_{m+1} / B_m / A_{s+m+1}
    const Word head = left_odd ? wA(s) * wAb(m + 1) : wA(s) * wBb(m);
    const Word mid = left_odd ? wB(m) : wA(m);
    const Word drop = left_odd ? wA(s + m + 1) : wB(s + m);
    // right-even: A_n / B_n A_s / Bb_{s+n}; right-odd: Bb_n / Ab_{n+1} A_s / A_{s+n+1}
    const Word tail = right_odd ? wBb(n) : wA(n);
    const Word climb = right_odd ? wAb(n + 1) * wA(s) : wB(n) * wA(s);
    const Word fall = right_odd ? wA(s + n + 1) : wBb(s + n);

    Expr r;
    r.add_term(1, head * ez * tail);
    r.add_term(1, mid * ez * wA(s) * ez * tail);
    r.add_term(1, mid * ez * wAb(s) * ez * tail);
    r.add_term(1, mid * ez * climb);
    r.add_term(-1, drop * ez * tail);
    r.add_term(-1, mid * ez * fall);
    return r;
}

inline const std::array<std::string, 8>& derivative_residual_names() {
    static const std::array<std::string, 8> names = {
        "d0_Fee", "d1_Fee", "d0_Foe", "d1_Foe",
        "d0_Feo", "d1_Feo", "d0_Foo", "d1_Foo"};
    return names;
}

/// LHS - RHS for the eight derivative identities, in the order of
/// derivative_residual_names(). All eight are the zero Expr.
inline std::array<Expr, 8> derivative_residuals(const FParams& p) {
    if (p.m < 0 || p.n < 0)
        throw bad_params("derivative_residuals requires m, n >= 0");
    const int s = p.s, m = p.m, n = p.n;

    const auto dAB = [&](int k) {
        return delta(Expr::from_word(family_word(Block::A, s) *
                                     family_word(Block::Bbar, k)));
    };
    const auto f = [&](FamilyKind kind, int mm, int nn) {
        return F(kind, FParams{s, mm, nn});
    };

    const Expr fee = f(FamilyKind::ee, m, n);
    const Expr foe = f(FamilyKind::oe, m, n);
    const Expr feo = f(FamilyKind::eo, m, n);
    const Expr foo = f(FamilyKind::oo, m, n);

    return {
        partial(0, fee) - (f(FamilyKind::oe, m - 1, n) - dAB(m + n)),
        partial(1, fee) - (-f(FamilyKind::eo, m, n - 1) + dAB(m + n)),
        partial(0, foe),
        partial(1, foe) - (fee - f(FamilyKind::oo, m, n - 1)),
        partial(0, feo) - (-fee + f(FamilyKind::oo, m - 1, n)),
        partial(1, feo),
        partial(0, foo) - (-foe + dAB(m + n + 1)),
        partial(1, foo) - (feo - dAB(m + n + 1)),
    };
}

/// The four-word value of lim_{z -> -0} L(F_ee(m,n)):
/// A_s Bb_m Bb_n + A_m Bb_s Bb_n + A_m Ab_{n+1} A_s - A_{s+m+n+1}.
inline Expr limit_target(const FParams& p) {
    if (p.s < 1)
        throw bad_s("limit_target requires s >= 1, got " + std::to_string(p.s));
    if (p.m < 0 || p.n < 0)
        throw bad_params("limit_target requires m, n >= 0");
    using namespace detail;
    const int s = p.s, m = p.m, n = p.n;
    Expr r;
    r.add_term(1, wA(s) * wBb(m) * wBb(n));
    r.add_term(1, wA(m) * wBb(s) * wBb(n));
    r.add_term(1, wA(m) * wAb(n + 1) * wA(s));
    r.add_term(-1, wA(s + m + n + 1));
    return r;
}

/// F_ee(m,n) specialized at ez -> e0 minus limit_target; the zero Expr
/// (the specialization produces two extra words that cancel pairwise).
inline Expr limit_residual(const FParams& p) {
    return substitute_ez(F(FamilyKind::ee, p), Letter::E0) - limit_target(p);
}

}  // namespace mzvh
