#pragma once

/// The letter-deletion derivations d_{z,0} and d_{z,1} and the ez -> t
/// specialization. Boundary convention: a_0 = 0 on the left, a_{n+1} = 1 on
/// the right. The Kronecker delta compares unordered letter pairs, so a pair
/// matches {z,b} exactly when one member is ez and the other is b.

#include <cstddef>
#include <vector>

#include "mzvh/word_algebra.hpp"

namespace mzvh {

namespace detail {

// unordered {a,b} == {z,bit}; {z,z} never matches since {z,bit} has two
// distinct members
inline bool pair_matches_zb(Letter a, Letter b, Letter bit) {
    return (a == Letter::EZ && b == bit) || (b == Letter::EZ && a == bit);
}

}  // namespace detail

/// d_{z,b} on a word e_{a_1}...e_{a_n}: sum over i of
/// (delta_{{a_i,a_{i+1}},{z,b}} - delta_{{a_{i-1},a_i},{z,b}}) times the word
/// with letter i deleted. Every surviving word has length n-1, and ez-free
/// words are annihilated.
inline Expr partial(int b, const Expr& x) {
    const Letter bit = b == 0 ? Letter::E0 : Letter::E1;
    Expr r;
    for (const auto& [w, c] : x) {
        const std::size_t n = w.length();
        for (std::size_t i = 0; i < n; ++i) {
            const Letter prev = i == 0 ? Letter::E0 : w[i - 1];
            const Letter next = i + 1 == n ? Letter::E1 : w[i + 1];
            int weight = 0;
            if (detail::pair_matches_zb(w[i], next, bit)) weight += 1;
            if (detail::pair_matches_zb(prev, w[i], bit)) weight -= 1;
            if (weight == 0) continue;
            std::vector<Letter> ls;
            ls.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) ls.push_back(w[j]);
            r.add_term(c * weight, Word(std::move(ls)));
        }
    }
    return r;
}

/// Replace every ez by t; merged terms may cancel.
inline Expr substitute_ez(const Expr& x, Letter t) {
    Expr r;
    for (const auto& [w, c] : x) {
        std::vector<Letter> ls = w.letters();
        for (auto& l : ls)
            if (l == Letter::EZ) l = t;
        r.add_term(c, Word(std::move(ls)));
    }
    return r;
}

}  // namespace mzvh
