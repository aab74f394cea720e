#pragma once

/// Structured checks over the symbolic and numeric layers: each returns a
/// Report with named residuals. A residual passes when it is symbolically the
/// zero Expr (exact_zero) or when |value| <= tol. Grid runners evaluate
/// parameter boxes concurrently and return reports in parameter order.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mzvh/families.hpp"
#include "mzvh/mzv_bridge.hpp"
#include "mzvh/numerics.hpp"
#include "mzvh/textio.hpp"

namespace mzvh {

struct Param {
    std::string name;
    std::string text;       // preformatted value
    bool numeric = false;   // emit unquoted in JSON
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline Param param_int(std::string name, long long v) {
    return {std::move(name), std::to_string(v), true};
}
inline Param param_double(std::string name, double v) {
    return {std::move(name), format_double(v), true};
}
inline Param param_text(std::string name, std::string v) {
    return {std::move(name), std::move(v), false};
}

struct Residual {
    std::string name;
    bool exact_zero = false;
    std::optional<double> value;
    std::optional<double> tol;

    bool ok() const {
        if (exact_zero) return true;
        return value && tol && std::abs(*value) <= *tol;
    }

    static Residual exact(std::string name, bool is_zero) {
        Residual r;
        r.name = std::move(name);
        r.exact_zero = is_zero;
        return r;
    }
    static Residual numeric(std::string name, double value, double tol) {
        Residual r;
        r.name = std::move(name);
        r.value = value;
        r.tol = tol;
        return r;
    }
};

enum class CheckStatus { pass, fail, error };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "?";
}

struct Report {
    std::string check;
    std::vector<Param> params;
    CheckStatus status = CheckStatus::pass;
    std::vector<Residual> residuals;
    std::string details;

    void finish() {
        for (const auto& r : residuals)
            if (!r.ok()) {
                status = CheckStatus::fail;
                return;
            }
        status = CheckStatus::pass;
    }
};

namespace checkdetail {

inline std::vector<Param> fparams(const FParams& p) {
    return {param_int("s", p.s), param_int("m", p.m), param_int("n", p.n)};
}

}  // namespace checkdetail

/// Eight exact residuals of the derivative recurrences at one (s,m,n).
inline Report derivative_check(const FParams& p) {
    Report rep;
    rep.check = "derivatives";
    rep.params = checkdetail::fparams(p);
    const auto residuals = derivative_residuals(p);
    const auto& names = derivative_residual_names();
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        rep.residuals.push_back(Residual::exact(names[i], residuals[i].is_zero()));
        if (!residuals[i].is_zero())
            rep.details += names[i] + " = " + format_expr(residuals[i]) + "; ";
    }
    rep.finish();
    return rep;
}

/// Exact residual of the ez -> e0 limit identity at one (s,m,n).
inline Report limit_check(const FParams& p) {
    Report rep;
    rep.check = "limit";
    rep.params = checkdetail::fparams(p);
    const Expr r = limit_residual(p);
    rep.residuals.push_back(Residual::exact("limit_residual", r.is_zero()));
    if (!r.is_zero()) rep.details = format_expr(r);
    rep.finish();
    return rep;
}

/// Central difference of L(x) against (1/z) L(d0 x) + (1/(z-1)) L(d1 x).
inline Report diff_check(const Expr& x, double z, double h, double tol) {
    Report rep;
    rep.check = "differential";
    rep.params = {param_text("expr", format_expr(x)), param_double("z", z),
                  param_double("h", h), param_double("tol", tol)};
    if (!(z < 0) || !(h > 0) || !(h < -z / 4))
        throw bad_params("diff_check requires z < 0 and 0 < h << |z|");

    EvalParams inner;
    inner.tol = 1e-13;
    const Expr d0 = partial(0, x);
    const Expr d1 = partial(1, x);

    inner.z = z + h;
    const Real plus = eval_L_precise(x, inner).value;
    inner.z = z - h;
    const Real minus = eval_L_precise(x, inner).value;
    inner.z = z;
    const Real lhs = (plus - minus) / (2 * Real(h));
    const Real rhs = eval_L_precise(d0, inner).value / Real(z) +
                     eval_L_precise(d1, inner).value / (Real(z) - 1);

    const double residual = static_cast<double>(abs(lhs - rhs));
    rep.residuals.push_back(Residual::numeric("diff_residual", residual, tol));
    rep.details = "dL/dz ~ " + format_double(static_cast<double>(lhs));
    rep.finish();
    return rep;
}

/// |L(F(kind, p))| <= tol at every z in zs; exact when F is the zero Expr.
inline Report vanish_check(FamilyKind kind, const FParams& p,
                           const std::vector<double>& zs, double tol) {
    Report rep;
    rep.check = "vanishing";
    rep.params = checkdetail::fparams(p);
    rep.params.insert(rep.params.begin(),
                      param_text("family", family_kind_name(kind)));
    rep.params.push_back(param_double("tol", tol));
    const Expr f = F(kind, p);
    if (f.is_zero()) {
        rep.residuals.push_back(Residual::exact("L(F)", true));
        rep.details = "F is the zero expression";
        rep.finish();
        return rep;
    }
    for (double z : zs) {
        EvalParams ep;
        ep.z = z;
        ep.tol = std::min(1e-3, tol / 10);
        const ApproxValue v = eval_L(f, ep);
        rep.residuals.push_back(
            Residual::numeric("L(F)@z=" + format_double(z), v.value, tol));
    }
    rep.finish();
    return rep;
}

/// |L(x)(z_i)| strictly decreasing along zs, each within its tolerance.
/// tols must have one entry per z, or a single entry applied to the last z.
inline Report decay_check(const Expr& x, const std::vector<double>& zs,
                          const std::vector<double>& tols) {
    Report rep;
    rep.check = "decay";
    rep.params = {param_text("expr", format_expr(x))};
    if (zs.size() < 2) throw bad_params("decay_check needs at least two z values");
    if (tols.size() != zs.size() && tols.size() != 1)
        throw bad_params("tolerance schedule must match z list (or be a single final tolerance)");
    for (std::size_t i = 1; i < zs.size(); ++i)
        if (!(zs[i] < zs[i - 1]))
            throw bad_params("z list must decrease towards -infinity");
    if (!in_ideal(x))
        throw inadmissible_input("decay_check requires every word to contain ez");

    std::vector<double> magnitudes;
    for (std::size_t i = 0; i < zs.size(); ++i) {
        EvalParams ep;
        ep.z = zs[i];
        ep.tol = 1e-12;
        magnitudes.push_back(std::abs(eval_L(x, ep).value));
        const bool has_tol = tols.size() == zs.size() || i + 1 == zs.size();
        if (has_tol) {
            const double tol = tols.size() == 1 ? tols[0] : tols[i];
            rep.residuals.push_back(Residual::numeric(
                "|L(x)|@z=" + format_double(zs[i]), magnitudes.back(), tol));
        }
        if (i > 0) {
            const double growth =
                std::max(0.0, magnitudes[i] - magnitudes[i - 1]);
            rep.residuals.push_back(Residual::numeric(
                "decrease@z=" + format_double(zs[i]), growth, 0.0));
        }
        rep.details += (i ? " " : "") + format_double(magnitudes.back());
    }
    rep.finish();
    return rep;
}

/// |sum coeff * zeta(index)| <= tol.
inline Report identity_check(const Identity& id, double tol) {
    Report rep;
    rep.check = "identity";
    rep.params = {param_text("identity", format_identity(id)),
                  param_double("tol", tol)};
    Rational mass(0);
    for (const auto& [c, k] : id.terms()) mass += c < 0 ? Rational(-c) : c;
    const double term_tol = std::max(
        1e-14, tol / (4 * static_cast<double>(Real(mass))));
    Real acc = 0;
    for (const auto& [c, k] : id.terms())
        acc += Real(c) * eval_zeta_precise(k, term_tol).value;
    rep.residuals.push_back(Residual::numeric(
        "identity_residual", static_cast<double>(abs(acc)), tol));
    rep.finish();
    return rep;
}

/// |L(delta(w))| <= tol for an ez-free admissible word (duality relation).
inline Report duality_check(const Word& w, double tol) {
    Report rep;
    rep.check = "duality";
    rep.params = {param_text("word", format_word(w)), param_double("tol", tol)};
    if (w.has_ez() || !is_admissible(w))
        throw inadmissible_input("duality_check needs an admissible {e0,e1} word");
    const Expr d = delta(Expr::from_word(w));
    if (d.is_zero()) {
        rep.residuals.push_back(Residual::exact("L(delta)", true));
        rep.details = "word is self-dual";
        rep.finish();
        return rep;
    }
    EvalParams ep;
    ep.tol = std::min(1e-3, tol / 10);
    const ApproxValue v = eval_L(d, ep);
    rep.residuals.push_back(Residual::numeric("L(delta)", v.value, tol));
    rep.finish();
    return rep;
}

/// Runs fn(i) for i in [0, count) across threads; results land in index
/// order. The first exception thrown by fn is rethrown in the caller.
inline std::vector<Report> run_indexed(std::size_t count,
                                       const std::function<Report(std::size_t)>& fn) {
    std::vector<Report> out(count);
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        std::min<std::size_t>(count, hw == 0 ? 2 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> bailed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || bailed.load()) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    bailed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

struct IntRange {
    int lo = 0;
    int hi = 0;  // inclusive
    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
};

/// All (s,m,n) tuples of a box, in row-major order.
inline std::vector<FParams> grid_tuples(IntRange s, IntRange m, IntRange n) {
    std::vector<FParams> ts;
    ts.reserve(s.size() * m.size() * n.size());
    for (int a = s.lo; a <= s.hi; ++a)
        for (int b = m.lo; b <= m.hi; ++b)
            for (int c = n.lo; c <= n.hi; ++c) ts.push_back(FParams{a, b, c});
    return ts;
}

namespace checkdetail {

inline void require_f_box(IntRange s, IntRange m, IntRange n) {
    if (s.lo < 1) throw bad_s("grid requires s >= 1");
    if (m.lo < 0 || n.lo < 0) throw bad_params("grid requires m, n >= 0");
}

}  // namespace checkdetail

inline std::vector<Report> derivative_grid(IntRange s, IntRange m, IntRange n) {
    checkdetail::require_f_box(s, m, n);
    const auto ts = grid_tuples(s, m, n);
    return run_indexed(ts.size(),
                       [&](std::size_t i) { return derivative_check(ts[i]); });
}

inline std::vector<Report> limit_grid(IntRange s, IntRange m, IntRange n) {
    checkdetail::require_f_box(s, m, n);
    const auto ts = grid_tuples(s, m, n);
    return run_indexed(ts.size(),
                       [&](std::size_t i) { return limit_check(ts[i]); });
}

}  // namespace mzvh
