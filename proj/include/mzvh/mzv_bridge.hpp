#pragma once

/// Dictionary between {e0,e1}-words and MZV indices:
///   zeta(k_1,...,k_d) = (-1)^d L(e1 e0^{k_1-1} ... e1 e0^{k_d-1}),
/// with the increasing-summation convention 0 < n_1 < ... < n_d, so the LAST
/// exponent governs convergence. Duals, and the three-term theorem instances
/// as signed index combinations.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mzvh/families.hpp"
#include "mzvh/word_algebra.hpp"

namespace mzvh {

/// Composition (k_1,...,k_d), every part >= 1.
class MzvIndex {
public:
    MzvIndex() = default;
    explicit MzvIndex(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int k : parts_)
            if (k < 1)
                throw bad_params("MZV index parts must be >= 1, got " +
                                 std::to_string(k));
    }
    MzvIndex(std::initializer_list<int> parts)
        : MzvIndex(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t depth() const { return parts_.size(); }
    int weight() const {
        int w = 0;
        for (int k : parts_) w += k;
        return w;
    }
    /// Convergent iff empty or the last exponent is >= 2.
    bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

    friend bool operator==(const MzvIndex&, const MzvIndex&) = default;
    friend auto operator<=>(const MzvIndex& a, const MzvIndex& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string debug_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

/// Signed combination of admissible indices asserted to sum to zero. The
/// given term list is kept as-is (nonzero coefficients, one shared weight);
/// equality compares canonical forms, i.e. holds up to reordering after
/// coefficient merge.
class Identity {
public:
    using Term = std::pair<Rational, MzvIndex>;

    Identity() = default;
    explicit Identity(std::vector<Term> terms) : terms_(std::move(terms)) {
        if (terms_.empty())
            throw bad_params("identity must have at least one term");
        const int w = terms_.front().second.weight();
        for (const auto& [c, k] : terms_) {
            if (c == 0)
                throw bad_params("identity coefficients must be nonzero");
            if (!k.admissible())
                throw inadmissible_input("identity term " + k.debug_string() +
                                         " is not admissible");
            if (k.weight() != w)
                throw bad_params("identity terms must share one weight (" +
                                 std::to_string(w) + " vs " +
                                 std::to_string(k.weight()) + " at " +
                                 k.debug_string() + ")");
        }
    }

    const std::vector<Term>& terms() const { return terms_; }
    int weight() const { return terms_.front().second.weight(); }

    /// Sorted by index with equal indices merged and zeros dropped.
    std::vector<Term> canonical_terms() const {
        std::vector<Term> out;
        for (const auto& [c, k] : terms_) {
            auto it = std::lower_bound(
                out.begin(), out.end(), k,
                [](const Term& t, const MzvIndex& key) { return t.second < key; });
            if (it != out.end() && it->second == k) {
                it->first += c;
                if (it->first == 0) out.erase(it);
            } else {
                out.insert(it, Term{c, k});
            }
        }
        return out;
    }

    friend bool operator==(const Identity& a, const Identity& b) {
        return a.canonical_terms() == b.canonical_terms();
    }

    friend Identity operator*(const Rational& c, const Identity& id) {
        if (c == 0) throw bad_params("identity scaled by zero");
        Identity r;
        r.terms_ = id.terms_;
        for (auto& [coeff, k] : r.terms_) coeff *= c;
        return r;
    }

private:
    std::vector<Term> terms_;
};

/// Unique (index, sign) with w = e1 e0^{k_1-1} ... e1 e0^{k_d-1} and
/// sign = (-1)^d, so that L(w) = sign * zeta(index).
inline std::pair<MzvIndex, int> word_to_index(const Word& w) {
    if (w.has_ez())
        throw not_mzv_word("word contains ez: " + w.debug_string());
    if (!is_admissible(w))
        throw not_mzv_word("word is not admissible: " + w.debug_string());
    if (w.empty()) return {MzvIndex(), +1};
    if (w[0] != Letter::E1)
        throw not_mzv_word("word does not start with e1: " + w.debug_string());
    std::vector<int> parts;
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (w[i] == Letter::E1)
            parts.push_back(1);
        else
            ++parts.back();
    }
    const int sign = parts.size() % 2 == 0 ? +1 : -1;
    return {MzvIndex(std::move(parts)), sign};
}

inline Word index_to_word(const MzvIndex& k) {
    if (!k.admissible())
        throw inadmissible_input("index " + k.debug_string() +
                                 " is not admissible (last part must be >= 2)");
    std::vector<Letter> ls;
    ls.reserve(static_cast<std::size_t>(k.weight()));
    for (int part : k.parts()) {
        ls.push_back(Letter::E1);
        for (int i = 1; i < part; ++i) ls.push_back(Letter::E0);
    }
    return Word(std::move(ls));
}

/// Index of the tau-image word; duality asserts zeta(k) = zeta(dual_index(k)).
/// Involution; preserves weight and sends depth d to weight - d.
inline MzvIndex dual_index(const MzvIndex& k) {
    if (k.depth() == 0)
        throw inadmissible_input("dual_index requires depth >= 1");
    const Expr t = tau(Expr::from_word(index_to_word(k)));
    return word_to_index(t.begin()->first).first;
}

/// zeta({2}^{m-1},3,{2}^n,1,{2}^s) = zeta({2}^{n+m+s+1})
///   + zeta({2}^{s-1},3,{2}^{m-1},3,{2}^n) + zeta({2}^{m-1},3,{2}^{s-1},3,{2}^n)
/// as a signed term list; the two three-part indices merge to coefficient -2
/// when m = s.
inline Identity theorem_identity(int m, int s, int n) {
    if (m < 1 || s < 1 || n < 0)
        throw bad_params("theorem_identity requires m >= 1, s >= 1, n >= 0");
    const auto twos = [](std::vector<int>& parts, int count) {
        parts.insert(parts.end(), static_cast<std::size_t>(count), 2);
    };
    std::vector<int> lhs;
    twos(lhs, m - 1);
    lhs.push_back(3);
    twos(lhs, n);
    lhs.push_back(1);
    twos(lhs, s);

    std::vector<int> all2;
    twos(all2, n + m + s + 1);

    const auto two_threes = [&](int a, int b) {
        std::vector<int> parts;
        twos(parts, a - 1);
        parts.push_back(3);
        twos(parts, b - 1);
        parts.push_back(3);
        twos(parts, n);
        return parts;
    };

    std::vector<Identity::Term> terms;
    terms.emplace_back(Rational(1), MzvIndex(std::move(lhs)));
    terms.emplace_back(Rational(-1), MzvIndex(std::move(all2)));
    if (m == s) {
        terms.emplace_back(Rational(-2), MzvIndex(two_threes(s, m)));
    } else {
        terms.emplace_back(Rational(-1), MzvIndex(two_threes(s, m)));
        terms.emplace_back(Rational(-1), MzvIndex(two_threes(m, s)));
    }
    return Identity(std::move(terms));
}

/// Termwise word_to_index with signs folded into the coefficients: the
/// resulting Identity represents L(x) written as a zeta combination.
inline Identity expr_to_identity(const Expr& x) {
    std::vector<Identity::Term> terms;
    terms.reserve(x.term_count());
    for (const auto& [w, c] : x) {
        auto [index, sign] = word_to_index(w);
        terms.emplace_back(c * sign, std::move(index));
    }
    return Identity(std::move(terms));
}

}  // namespace mzvh
