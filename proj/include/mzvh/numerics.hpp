#pragma once

/// Floating evaluation of L(w) = I(0; a_1..a_m; 1) for admissible words,
/// with real z < 0 when ez occurs, and of MZVs.
///
/// Both evaluation routes split the path at t = 1/2:
///   I(0;a_1..a_m;1) = sum_k I(0;a_1..a_k;1/2) * I(1/2;a_{k+1}..a_m;1),
/// and the upper half maps back to [0,1/2] by t -> 1-t, which swaps e0 <-> e1,
/// sends the ez singularity to 1-z, and contributes (-1)^{length}.
///
/// Route "series" ({0,1} letters): each half-integral is a truncated multiple
/// polylogarithm sum at x = 1/2 with a proven tail bound, converging like 2^-N.
///
/// Route "ode" (any letters): the chain g_k(t) = int_0^t g_{k-1}(u)/(u - a_k) du
/// is marched from 0 to 1/2 by recentered Taylor panels. Panel radii are capped
/// by the distance to the actual singularities {1, z} (0 is a regular point of
/// this solution branch) and, away from 0, by twice the distance to 0 to keep
/// the recentering of 1/t numerically tame.
///
/// All internal arithmetic uses 50-digit floats; results are reported as
/// doubles with an error bound.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "mzvh/errors.hpp"
#include "mzvh/mzv_bridge.hpp"
#include "mzvh/word_algebra.hpp"

namespace mzvh {

using Real = boost::multiprecision::number<boost::multiprecision::backends::cpp_bin_float<50>,
                                            boost::multiprecision::et_off>;

struct EvalParams {
    std::optional<double> z;  // required when the input contains ez; z < 0
    double tol = 1e-10;       // absolute error target, within [1e-14, 1e-2]
    int max_weight = 24;      // cap on word length
};

inline void validate(const EvalParams& p) {
    if (!(p.tol >= 1e-14 && p.tol <= 1e-2))
        throw bad_params("tol must lie in [1e-14, 1e-2]");
    if (p.z && !(*p.z < 0))
        throw bad_params("z must be strictly negative");
    if (p.max_weight < 0)
        throw bad_params("max_weight must be >= 0");
}

struct ApproxValue {
    double value = 0;
    double err_bound = 0;
};

struct PreciseValue {
    Real value = 0;
    Real err = 0;
};

enum class EvalRoute { automatic, series, ode };

namespace numdetail {

inline Real pow_int(const Real& x, int k) {
    Real r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// ---------------------------------------------------------------- series ----

// I(0; u; 1/2) for u = e1 e0^{k_1-1} ... e1 e0^{k_d-1}:
//   (-1)^d sum_{0<n_1<...<n_d} (1/2)^{n_d} / (n_1^{k_1} ... n_d^{k_d}).
// Chain-count layers satisfy S_i(n) <= (1+ln n)^i, so the tail beyond N is
// at most (1/2)^{N+1} (1+ln(N+1))^{d-1} / (1 - e^{(d-1)/(N+1)}/2).
inline PreciseValue series_half_value(const std::vector<int>& exps, double tol) {
    const std::size_t d = exps.size();
    if (d == 0) return {Real(1), Real(0)};

    const auto tail_bound = [&](int n) {
        const Real lg = 1 + log(Real(n + 1));
        const Real ratio = exp(Real(static_cast<int>(d) - 1) / (n + 1)) / 2;
        if (ratio >= Real(9) / 10) return Real(1);  // force a larger N
        return pow_int(Real(1) / 2, n + 1) * pow_int(lg, static_cast<int>(d) - 1) /
               (1 - ratio);
    };

    int N = std::max<int>(48, 8 * static_cast<int>(d));
    while (N < 100000 && tail_bound(N) > Real(tol) / 2) N += N / 2 + 8;

    const std::size_t sz = static_cast<std::size_t>(N) + 1;
    std::vector<Real> S(sz, Real(1));  // S_0(nu) = 1
    for (std::size_t layer = 0; layer + 1 < d; ++layer) {
        std::vector<Real> T(sz);
        T[0] = 0;
        for (int nu = 1; nu <= N; ++nu)
            T[nu] = T[nu - 1] + S[nu - 1] / pow_int(Real(nu), exps[layer]);
        S.swap(T);
    }
    Real sum = 0, xp = 1;
    const Real half = Real(1) / 2;
    for (int nu = 1; nu <= N; ++nu) {
        xp *= half;
        sum += xp * S[nu - 1] / pow_int(Real(nu), exps[d - 1]);
    }
    if (d % 2) sum = -sum;
    return {sum, tail_bound(N)};
}

// Values I(0; prefix_k; 1/2) for k = 0..m of a {0,1} word starting with e1.
inline void series_prefix_values(const std::vector<Letter>& ls, double tol,
                                 std::vector<Real>& vals, Real& err) {
    vals.assign(ls.size() + 1, Real(1));
    err = 0;
    std::vector<int> exps;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] == Letter::E1)
            exps.push_back(1);
        else
            ++exps.back();
        auto [v, e] = series_half_value(exps, tol);
        vals[i + 1] = v;
        if (e > err) err = e;
    }
}

// ------------------------------------------------------------------- ode ----

// One march of the Taylor-panel chain with N terms per series. pos[k-1] is
// the singularity position of letter k (0, 1, or the real z / 1-z); the first
// position must be nonzero. Fills vals[0..m] = g_k(1/2) and an error estimate.
inline void ode_march(const std::vector<Real>& pos, int N,
                      std::vector<Real>& vals, Real& err) {
    const std::size_t m = pos.size();
    if (m > 0 && pos[0] == 0)
        throw inadmissible_input("integral diverges: leading letter at 0");
    const Real target = Real(1) / 2;
    const Real theta = Real(1) / 2;

    std::vector<Real> sing;  // actual singular points of the chain
    sing.push_back(Real(1));
    for (const Real& p : pos)
        if (p != 0 && p != 1) sing.push_back(p);

    std::vector<std::vector<Real>> c(m + 1, std::vector<Real>(static_cast<std::size_t>(N), Real(0)));
    c[0][0] = 1;
    std::vector<Real> at(m + 1, Real(0));  // g_k at the current center
    at[0] = 1;

    std::vector<Real> u(static_cast<std::size_t>(N));
    std::vector<Real> h(static_cast<std::size_t>(N));

    const auto rebuild = [&](const Real& center) {
        for (std::size_t k = 1; k <= m; ++k) {
            if (center == 0 && pos[k - 1] == 0) {
                // g_{k-1}(0) = 0, so g_{k-1}/t integrates termwise
                c[k][0] = 0;
                for (int j = 1; j < N; ++j) c[k][static_cast<std::size_t>(j)] = c[k - 1][static_cast<std::size_t>(j)] / j;
                continue;
            }
            // geometric expansion of 1/(t - p) at the center: q = center - p
            const Real q = center - pos[k - 1];
            Real qp = 1 / q;
            for (int j = 0; j < N; ++j) {
                u[static_cast<std::size_t>(j)] = qp;
                qp = -qp / q;
            }
            // h = c[k-1] * u truncated; then integrate with constant at[k]
            for (int j = 0; j + 1 < N; ++j) {
                Real acc = 0;
                for (int i = 0; i <= j; ++i)
                    acc += c[k - 1][static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(j - i)];
                h[static_cast<std::size_t>(j)] = acc;
            }
            c[k][0] = at[k];
            for (int j = 1; j < N; ++j) c[k][static_cast<std::size_t>(j)] = h[static_cast<std::size_t>(j - 1)] / j;
        }
    };

    // evaluate series k at offset tau, adding a tail estimate to err
    const auto evaluate = [&](std::size_t k, const Real& tau) {
        Real sum = 0, tp = 1, tail = 0;
        for (int j = 0; j < N; ++j) {
            const Real term = c[k][static_cast<std::size_t>(j)] * tp;
            sum += term;
            if (j >= N - 3) tail += abs(term);
            tp *= tau;
        }
        err += 2 * tail;
        return sum;
    };

    rebuild(Real(0));
    Real a = 0;
    for (int panel = 0; panel < 200; ++panel) {
        Real r = abs(sing[0] - a);
        for (std::size_t i = 1; i < sing.size(); ++i) {
            const Real d = abs(sing[i] - a);
            if (d < r) r = d;
        }
        if (a != 0 && 2 * a < r) r = 2 * a;
        const Real step = theta * r;
        if (target - a <= step) {
            const Real tau = target - a;
            for (std::size_t k = 0; k <= m; ++k) vals[k] = evaluate(k, tau);
            return;
        }
        for (std::size_t k = 1; k <= m; ++k) at[k] = evaluate(k, step);
        a += step;
        rebuild(a);
    }
    throw tolerance_unreachable("panel march did not reach the midpoint");
}

inline void ode_prefix_values(const std::vector<Real>& pos, double tol,
                              std::vector<Real>& vals, Real& err) {
    vals.assign(pos.size() + 1, Real(1));
    err = 0;
    if (pos.empty()) return;
    int N = 64;
    for (;;) {
        err = 0;
        ode_march(pos, N, vals, err);
        if (err <= Real(tol)) return;
        if (N >= 256)
            throw tolerance_unreachable(
                "series length cap reached at requested tolerance " +
                std::to_string(tol));
        N *= 2;
    }
}

// ------------------------------------------------------------ chen glue ----

inline Real sum_abs(const std::vector<Real>& v) {
    Real s = 0;
    for (const Real& x : v) s += abs(x);
    return s;
}

// low[k] = I(0; first k letters; 1/2), up[j] = same for the mirrored word;
// I(0; w; 1) = sum_k low[k] * (-1)^{m-k} * up[m-k].
inline PreciseValue chen_combine(const std::vector<Real>& low, const Real& low_err,
                                 const std::vector<Real>& up, const Real& up_err) {
    const std::size_t m = low.size() - 1;
    Real v = 0;
    for (std::size_t k = 0; k <= m; ++k) {
        const Real term = low[k] * up[m - k];
        v += ((m - k) % 2) ? -term : term;
    }
    const Real err =
        low_err * sum_abs(up) + up_err * sum_abs(low) + Real("1e-42") * sum_abs(low) * sum_abs(up);
    return {v, err};
}

inline std::vector<Letter> mirror_letters(const Word& w) {
    std::vector<Letter> r(w.length());
    for (std::size_t i = 0; i < w.length(); ++i) {
        const Letter l = w[w.length() - 1 - i];
        r[i] = l == Letter::E0 ? Letter::E1 : (l == Letter::E1 ? Letter::E0 : Letter::EZ);
    }
    return r;
}

inline std::vector<Real> letter_positions(const std::vector<Letter>& ls, const Real& ez_pos) {
    std::vector<Real> pos(ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i)
        pos[i] = ls[i] == Letter::E0 ? Real(0) : (ls[i] == Letter::E1 ? Real(1) : ez_pos);
    return pos;
}

inline PreciseValue eval_word(const Word& w, const std::optional<Real>& z,
                              double tol, EvalRoute route) {
    if (w.empty()) return {Real(1), Real(0)};
    const bool ez = w.has_ez();
    if (route == EvalRoute::automatic)
        route = ez ? EvalRoute::ode : EvalRoute::series;

    const std::vector<Letter> lower = w.letters();
    const std::vector<Letter> upper = mirror_letters(w);
    const double half_tol = tol / 4;

    std::vector<Real> low, up;
    Real low_err = 0, up_err = 0;
    if (route == EvalRoute::series) {
        if (ez) throw inadmissible_input("series route handles only {e0,e1} words");
        series_prefix_values(lower, half_tol, low, low_err);
        series_prefix_values(upper, half_tol, up, up_err);
    } else {
        const Real zz = ez ? *z : Real(-1);  // unused position when ez-free
        ode_prefix_values(letter_positions(lower, zz), half_tol, low, low_err);
        ode_prefix_values(letter_positions(upper, 1 - zz), half_tol, up, up_err);
    }
    return chen_combine(low, low_err, up, up_err);
}

}  // namespace numdetail

/// L on an admissible Expr, within p.tol absolute error; linear, L(1) = 1.
inline PreciseValue eval_L_precise(const Expr& x, const EvalParams& p,
                                   EvalRoute route = EvalRoute::automatic) {
    validate(p);
    std::size_t words = 0;
    Rational coeff_mass(0);
    for (const auto& [w, c] : x) {
        if (!is_admissible(w))
            throw inadmissible_input("word is not admissible: " + w.debug_string());
        if (w.length() > static_cast<std::size_t>(p.max_weight))
            throw inadmissible_input("word length " + std::to_string(w.length()) +
                                     " exceeds max_weight " +
                                     std::to_string(p.max_weight));
        if (w.has_ez() && !p.z)
            throw missing_z("expression contains ez but no z was given");
        ++words;
        coeff_mass += c < 0 ? Rational(-c) : c;
    }
    if (words == 0) return {Real(0), Real(0)};

    Real mass(coeff_mass);
    if (mass < 1) mass = 1;
    const double word_tol = std::max(
        1e-30, static_cast<double>(Real(p.tol) / (2 * mass * static_cast<int>(words))));
    const std::optional<Real> z =
        p.z ? std::optional<Real>(Real(*p.z)) : std::nullopt;

    Real value = 0, err = 0;
    for (const auto& [w, c] : x) {
        const PreciseValue pv = numdetail::eval_word(w, z, word_tol, route);
        const Real rc(c);
        value += rc * pv.value;
        err += abs(rc) * pv.err;
    }
    if (err > Real(p.tol))
        throw tolerance_unreachable("accumulated error bound " +
                                    std::to_string(static_cast<double>(err)) +
                                    " exceeds tol");
    return {value, err};
}

inline ApproxValue eval_L(const Expr& x, const EvalParams& p,
                          EvalRoute route = EvalRoute::automatic) {
    const PreciseValue pv = eval_L_precise(x, p, route);
    return {static_cast<double>(pv.value), static_cast<double>(pv.err)};
}

/// zeta(k) within tol; equals (-1)^depth * L(index_to_word(k)).
inline PreciseValue eval_zeta_precise(const MzvIndex& k, double tol) {
    if (!k.admissible())
        throw inadmissible_input("index " + k.debug_string() +
                                 " is not admissible (last part must be >= 2)");
    if (k.weight() > 22)
        throw inadmissible_input("index weight " + std::to_string(k.weight()) +
                                 " exceeds the supported limit 22");
    if (!(tol >= 1e-14 && tol <= 1e-2))
        throw bad_params("tol must lie in [1e-14, 1e-2]");
    const Word w = index_to_word(k);
    PreciseValue pv = numdetail::eval_word(w, std::nullopt, tol, EvalRoute::series);
    if (k.depth() % 2) pv.value = -pv.value;
    return pv;
}

inline ApproxValue eval_zeta(const MzvIndex& k, double tol) {
    const PreciseValue pv = eval_zeta_precise(k, tol);
    return {static_cast<double>(pv.value), static_cast<double>(pv.err)};
}

}  // namespace mzvh
