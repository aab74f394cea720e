// mzvh: command-line harness over the word-algebra, family, and numeric
// checks. Every subcommand prints one line per check (or a JSON array with
// --json) and exits 0 when everything passes, 1 when a check fails, 2 on
// usage or parse errors.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mzvh/checks.hpp"

using namespace mzvh;

namespace {

// ------------------------------------------------------------- formatting --

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void emit_json(const std::vector<Report>& reports, std::ostream& os) {
    os << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const Report& r = reports[i];
        os << "  {\"check\": \"" << json_escape(r.check) << "\", \"params\": {";
        for (std::size_t j = 0; j < r.params.size(); ++j) {
            const Param& p = r.params[j];
            if (j) os << ", ";
            os << '"' << json_escape(p.name) << "\": ";
            if (p.numeric)
                os << p.text;
            else
                os << '"' << json_escape(p.text) << '"';
        }
        os << "}, \"status\": \"" << status_name(r.status) << "\", \"residuals\": [";
        for (std::size_t j = 0; j < r.residuals.size(); ++j) {
            const Residual& res = r.residuals[j];
            if (j) os << ", ";
            os << "{\"name\": \"" << json_escape(res.name) << "\", \"exact_zero\": "
               << (res.exact_zero ? "true" : "false") << ", \"value\": "
               << (res.value ? format_double(*res.value) : "null") << ", \"tol\": "
               << (res.tol ? format_double(*res.tol) : "null") << "}";
        }
        os << "], \"details\": \"" << json_escape(r.details) << "\"}";
        os << (i + 1 < reports.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

std::string summarize(const Report& r) {
    bool all_exact = !r.residuals.empty();
    for (const auto& res : r.residuals)
        if (!res.exact_zero) all_exact = false;
    std::string s;
    if (all_exact) {
        s = std::to_string(r.residuals.size()) + " residual" +
            (r.residuals.size() == 1 ? "" : "s") + " exactly zero";
    } else {
        const Residual* worst = nullptr;
        for (const auto& res : r.residuals) {
            if (!res.ok()) {
                worst = &res;
                break;
            }
            if (res.value && (!worst || !worst->value ||
                              std::abs(*res.value) > std::abs(*worst->value)))
                worst = &res;
        }
        if (worst && worst->value) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%s = %.3g", worst->name.c_str(),
                          *worst->value);
            s = buf;
            if (worst->tol) {
                std::snprintf(buf, sizeof buf, " (tol %.3g)", *worst->tol);
                s += buf;
            }
        } else if (worst) {
            s = worst->name + " not exactly zero";
        }
    }
    if (!r.details.empty()) s += s.empty() ? r.details : " | " + r.details;
    return s;
}

void emit_text(const std::vector<Report>& reports, std::ostream& os) {
    for (const Report& r : reports) {
        os << (r.status == CheckStatus::pass   ? "[PASS] "
               : r.status == CheckStatus::fail ? "[FAIL] "
                                               : "[ERROR] ")
           << r.check;
        if (!r.params.empty()) {
            os << '(';
            for (std::size_t j = 0; j < r.params.size(); ++j) {
                if (j) os << ',';
                os << r.params[j].name << '=' << r.params[j].text;
            }
            os << ')';
        }
        const std::string s = summarize(r);
        if (!s.empty()) os << ": " << s;
        os << '\n';
    }
}

// --------------------------------------------------------------- parsing ---

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return IntRange{v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) throw bad_params("empty range: " + text);
        return IntRange{lo, hi};
    } catch (const std::invalid_argument&) {
        throw bad_params("expected an integer or a..b range, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw bad_params("range bound out of range: '" + text + "'");
    }
}

std::vector<double> parse_z_list(const std::string& text) {
    std::vector<double> zs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            zs.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw bad_params("bad z value '" + item + "'");
        }
        if (!(zs.back() < 0)) throw bad_params("z values must be negative");
    }
    if (zs.empty()) throw bad_params("empty z list");
    return zs;
}

Expr expr_from_flags(const std::string& word_text, const std::string& expr_text) {
    if (word_text.empty() == expr_text.empty())
        throw bad_params("give exactly one of --word or --expr");
    if (!word_text.empty()) return Expr::from_word(parse_word(word_text));
    return parse_expr(expr_text);
}

template <typename Fn>
Report guarded(const std::string& check, Fn&& fn) {
    try {
        return fn();
    } catch (const error& e) {
        Report r;
        r.check = check;
        r.status = CheckStatus::error;
        r.details = e.what();
        return r;
    }
}

struct Context {
    bool json = false;
    std::vector<Report> reports;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification harness for iterated-integral word identities "
                 "and multiple zeta values"};
    // --h is the difference step of `check differential`, so help is long-form
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    Context ctx;

    // per-leaf flag storage (defaults differ between subcommands)
    std::string der_s = "1..4", der_m = "0..6", der_n = "0..6";
    std::string lim_s = "1..4", lim_m = "0..6", lim_n = "0..6";
    std::string van_s = "1..2", van_m = "0..2", van_n = "0..2", van_family = "all";
    std::string van_z;
    std::string dif_word, dif_expr, dif_z;
    std::string dec_word, dec_expr, dec_z;
    std::string dua_word;
    std::string idc_m = "1..2", idc_s = "1..2", idc_n = "0..2", idc_text;
    std::string evw_word, evw_z, evz_index;
    std::string shw_m = "1", shw_s = "1", shw_n = "0";
    std::string par_word, par_index, par_expr, par_identity;
    double van_tol = 1e-6, dif_tol = 1e-4, dif_h = 1e-5, dec_tol = 1e-2;
    double dua_tol = 1e-8, idc_tol = 1e-8, evw_tol = 1e-10, evz_tol = 1e-10;

    auto* check = app.add_subcommand("check", "run a verification check");
    check->set_help_flag("--help", "print help");
    check->require_subcommand(1);

    const auto add_json = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_flag("--json", ctx.json, "emit a JSON report array");
    };

    // ---- check derivatives ----
    {
        auto* cmd = check->add_subcommand(
            "derivatives", "eight derivative recurrences, exact, on an (s,m,n) box");
        cmd->add_option("--s", der_s, "s or a..b (default 1..4)");
        cmd->add_option("--m", der_m, "m or a..b (default 0..6)");
        cmd->add_option("--n", der_n, "n or a..b (default 0..6)");
        add_json(cmd);
        cmd->callback([&] {
            ctx.reports = derivative_grid(parse_range(der_s), parse_range(der_m),
                                          parse_range(der_n));
        });
    }

    // ---- check limit ----
    {
        auto* cmd = check->add_subcommand(
            "limit", "ez -> e0 limit identity, exact, on an (s,m,n) box");
        cmd->add_option("--s", lim_s, "s or a..b (default 1..4)");
        cmd->add_option("--m", lim_m, "m or a..b (default 0..6)");
        cmd->add_option("--n", lim_n, "n or a..b (default 0..6)");
        add_json(cmd);
        cmd->callback([&] {
            ctx.reports = limit_grid(parse_range(lim_s), parse_range(lim_m),
                                     parse_range(lim_n));
        });
    }

    // ---- check differential ----
    {
        auto* cmd = check->add_subcommand(
            "differential",
            "central-difference test of d/dz L = (1/z) L(d0) + (1/(z-1)) L(d1)");
        cmd->add_option("--word", dif_word, "word (e.g. \"e1 ez\" or \"1z\")");
        cmd->add_option("--expr", dif_expr, "expression (e.g. \"Fee(1,0,0)\")");
        cmd->add_option("--z", dif_z, "comma list of negative z (default -0.5,-2)");
        cmd->add_option("--h", dif_h, "difference step (default 1e-5)");
        cmd->add_option("--tol", dif_tol, "residual tolerance (default 1e-4)");
        add_json(cmd);
        cmd->callback([&] {
            const Expr x = expr_from_flags(dif_word, dif_expr);
            if (!is_admissible(x))
                throw inadmissible_input("expression is not admissible");
            const std::vector<double> zs =
                parse_z_list(dif_z.empty() ? "-0.5,-2" : dif_z);
            for (double z : zs)
                ctx.reports.push_back(guarded(
                    "differential", [&] { return diff_check(x, z, dif_h, dif_tol); }));
        });
    }

    // ---- check vanishing ----
    {
        auto* cmd = check->add_subcommand(
            "vanishing", "numeric L(F(kind,s,m,n)) = 0 over a z list");
        cmd->add_option("--family", van_family, "ee|oe|eo|oo|all (default all)");
        cmd->add_option("--s", van_s, "s or a..b (default 1..2)");
        cmd->add_option("--m", van_m, "m or a..b (default 0..2)");
        cmd->add_option("--n", van_n, "n or a..b (default 0..2)");
        cmd->add_option("--z", van_z, "comma list of negative z (default -0.3,-1,-5)");
        cmd->add_option("--tol", van_tol, "tolerance (default 1e-6)");
        add_json(cmd);
        cmd->callback([&] {
            std::vector<FamilyKind> kinds;
            if (van_family == "all")
                kinds = {FamilyKind::ee, FamilyKind::oe, FamilyKind::eo, FamilyKind::oo};
            else if (van_family == "ee")
                kinds = {FamilyKind::ee};
            else if (van_family == "oe")
                kinds = {FamilyKind::oe};
            else if (van_family == "eo")
                kinds = {FamilyKind::eo};
            else if (van_family == "oo")
                kinds = {FamilyKind::oo};
            else
                throw bad_params("unknown family '" + van_family + "'");
            const std::vector<double> zs =
                parse_z_list(van_z.empty() ? "-0.3,-1,-5" : van_z);
            const auto tuples = grid_tuples(parse_range(van_s), parse_range(van_m),
                                            parse_range(van_n));
            std::vector<std::pair<FamilyKind, FParams>> jobs;
            for (FamilyKind k : kinds)
                for (const FParams& p : tuples) jobs.emplace_back(k, p);
            ctx.reports = run_indexed(jobs.size(), [&](std::size_t i) {
                return guarded("vanishing", [&] {
                    return vanish_check(jobs[i].first, jobs[i].second, zs, van_tol);
                });
            });
        });
    }

    // ---- check decay ----
    {
        auto* cmd = check->add_subcommand(
            "decay", "|L(x)| shrinks along decreasing z (final value under tol)");
        cmd->add_option("--word", dec_word, "word containing ez");
        cmd->add_option("--expr", dec_expr, "expression in the ez ideal");
        cmd->add_option("--z", dec_z,
                        "decreasing comma list (default -10,-100,-1000)");
        cmd->add_option("--tol", dec_tol, "tolerance at the final z (default 1e-2)");
        add_json(cmd);
        cmd->callback([&] {
            const Expr x = expr_from_flags(dec_word, dec_expr);
            if (!is_admissible(x) || !in_ideal(x))
                throw inadmissible_input(
                    "expression must be admissible with ez in every word");
            const std::vector<double> zs =
                parse_z_list(dec_z.empty() ? "-10,-100,-1000" : dec_z);
            ctx.reports.push_back(
                guarded("decay", [&] { return decay_check(x, zs, {dec_tol}); }));
        });
    }

    // ---- check duality ----
    {
        auto* cmd = check->add_subcommand(
            "duality", "numeric L(delta(word)) = 0 for an {e0,e1} word");
        cmd->add_option("--word", dua_word, "admissible {e0,e1} word")->required();
        cmd->add_option("--tol", dua_tol, "tolerance (default 1e-8)");
        add_json(cmd);
        cmd->callback([&] {
            const Word w = parse_word(dua_word);
            if (w.has_ez() || !is_admissible(w))
                throw inadmissible_input("duality needs an admissible {e0,e1} word");
            ctx.reports.push_back(
                guarded("duality", [&] { return duality_check(w, dua_tol); }));
        });
    }

    // ---- check identity ----
    {
        auto* cmd = check->add_subcommand(
            "identity", "numeric residual of theorem instances (or --identity text)");
        cmd->add_option("--m", idc_m, "m or a..b (default 1..2)");
        cmd->add_option("--s", idc_s, "s or a..b (default 1..2)");
        cmd->add_option("--n", idc_n, "n or a..b (default 0..2)");
        cmd->add_option("--identity", idc_text,
                        "explicit identity, e.g. \"zeta(3,1,2) = zeta({2}^3) + 2*zeta(3,3)\"");
        cmd->add_option("--tol", idc_tol, "tolerance (default 1e-8)");
        add_json(cmd);
        cmd->callback([&] {
            if (!idc_text.empty()) {
                const Identity id = parse_identity(idc_text);
                for (const auto& [c, k] : id.terms())
                    if (k.weight() > 22)
                        throw inadmissible_input("identity weight exceeds 22");
                ctx.reports.push_back(
                    guarded("identity", [&] { return identity_check(id, idc_tol); }));
                return;
            }
            const IntRange mr = parse_range(idc_m), sr = parse_range(idc_s),
                           nr = parse_range(idc_n);
            std::vector<std::array<int, 3>> jobs;
            for (int m = mr.lo; m <= mr.hi; ++m)
                for (int s = sr.lo; s <= sr.hi; ++s)
                    for (int n = nr.lo; n <= nr.hi; ++n)
                        jobs.push_back({m, s, n});
            for (const auto& j : jobs)
                theorem_identity(j[0], j[1], j[2]);  // validate before running
            ctx.reports = run_indexed(jobs.size(), [&](std::size_t i) {
                const auto [m, s, n] = jobs[i];
                return guarded("identity", [&, m = m, s = s, n = n] {
                    Report r = identity_check(theorem_identity(m, s, n), idc_tol);
                    std::vector<Param> ps = {param_int("m", m), param_int("s", s),
                                             param_int("n", n)};
                    ps.insert(ps.end(), r.params.begin(), r.params.end());
                    r.params = std::move(ps);
                    return r;
                });
            });
        });
    }

    auto* eval = app.add_subcommand("eval", "evaluate a word or an MZV");
    eval->set_help_flag("--help", "print help");
    eval->require_subcommand(1);

    // ---- eval word ----
    {
        auto* cmd = eval->add_subcommand("word", "L(word), optionally at several z");
        cmd->add_option("--word", evw_word, "word text")->required();
        cmd->add_option("--z", evw_z, "comma list of negative z");
        cmd->add_option("--tol", evw_tol, "tolerance (default 1e-10)");
        add_json(cmd);
        cmd->callback([&] {
            const Word w = parse_word(evw_word);
            if (!is_admissible(w))
                throw inadmissible_input("word is not admissible: " +
                                         w.debug_string());
            const double t = evw_tol;
            std::vector<std::optional<double>> zs;
            if (w.has_ez()) {
                if (evw_z.empty())
                    throw missing_z("word contains ez; give --z");
                for (double z : parse_z_list(evw_z)) zs.emplace_back(z);
            } else {
                zs.emplace_back(std::nullopt);
            }
            for (const auto& z : zs) {
                ctx.reports.push_back(guarded("eval_word", [&] {
                    Report r;
                    r.check = "eval_word";
                    r.params = {param_text("word", format_word(w)),
                                param_double("tol", t)};
                    if (z) r.params.push_back(param_double("z", *z));
                    EvalParams ep;
                    ep.tol = t;
                    ep.z = z;
                    const ApproxValue v = eval_L(Expr::from_word(w), ep);
                    r.residuals.push_back(
                        Residual::numeric("err_bound", v.err_bound, t));
                    r.details = "L = " + format_double(v.value);
                    r.finish();
                    return r;
                }));
            }
        });
    }

    // ---- eval zeta ----
    {
        auto* cmd = eval->add_subcommand("zeta", "zeta(index) with an error bound");
        cmd->add_option("--index", evz_index, "index, e.g. \"3,{2}^1,1,2\"")->required();
        cmd->add_option("--tol", evz_tol, "tolerance (default 1e-10)");
        add_json(cmd);
        cmd->callback([&] {
            const MzvIndex k = parse_index(evz_index);
            const double t = evz_tol;
            if (!k.admissible())
                throw inadmissible_input("index " + k.debug_string() +
                                         " is not admissible");
            if (k.weight() > 22)
                throw inadmissible_input("index weight exceeds 22");
            ctx.reports.push_back(guarded("eval_zeta", [&] {
                Report r;
                r.check = "eval_zeta";
                r.params = {param_text("index", format_index(k)),
                            param_double("tol", t)};
                const ApproxValue v = eval_zeta(k, t);
                r.residuals.push_back(Residual::numeric("err_bound", v.err_bound, t));
                r.details = "zeta = " + format_double(v.value);
                r.finish();
                return r;
            }));
        });
    }

    // ---- identity show ----
    {
        auto* ident = app.add_subcommand("identity", "work with theorem identities");
        ident->set_help_flag("--help", "print help");
        ident->require_subcommand(1);
        auto* cmd = ident->add_subcommand("show", "print a theorem instance");
        cmd->add_option("--m", shw_m, "m >= 1 (default 1)");
        cmd->add_option("--s", shw_s, "s >= 1 (default 1)");
        cmd->add_option("--n", shw_n, "n >= 0 (default 0)");
        add_json(cmd);
        cmd->callback([&] {
            const IntRange mr = parse_range(shw_m), sr = parse_range(shw_s),
                           nr = parse_range(shw_n);
            for (int m = mr.lo; m <= mr.hi; ++m)
                for (int s = sr.lo; s <= sr.hi; ++s)
                    for (int n = nr.lo; n <= nr.hi; ++n) {
                        Report r;
                        r.check = "identity_show";
                        r.params = {param_int("m", m), param_int("s", s),
                                    param_int("n", n)};
                        r.details = format_identity(theorem_identity(m, s, n));
                        r.finish();
                        ctx.reports.push_back(std::move(r));
                    }
        });
    }

    // ---- parse ----
    {
        auto* cmd = app.add_subcommand("parse", "parse input and print the canonical form");
        auto* ow = cmd->add_option("--word", par_word, "word text");
        auto* oi = cmd->add_option("--index", par_index, "index text");
        auto* oe = cmd->add_option("--expr", par_expr, "expression text");
        auto* od = cmd->add_option("--identity", par_identity, "identity text");
        add_json(cmd);
        cmd->callback([&] {
            Report r;
            r.check = "parse";
            const int given = static_cast<int>(ow->count() > 0) + (oi->count() > 0) +
                              (oe->count() > 0) + (od->count() > 0);
            if (given != 1)
                throw bad_params("give exactly one of --word/--index/--expr/--identity");
            if (ow->count()) {
                r.params = {param_text("kind", "word")};
                r.details = format_word(parse_word(par_word));
            } else if (oi->count()) {
                r.params = {param_text("kind", "index")};
                r.details = format_index(parse_index(par_index));
            } else if (oe->count()) {
                r.params = {param_text("kind", "expr")};
                r.details = format_expr(parse_expr(par_expr));
            } else {
                r.params = {param_text("kind", "identity")};
                r.details = format_identity(parse_identity(par_identity));
            }
            r.finish();
            ctx.reports.push_back(std::move(r));
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (ctx.json)
        emit_json(ctx.reports, std::cout);
    else
        emit_text(ctx.reports, std::cout);

    for (const Report& r : ctx.reports)
        if (r.status != CheckStatus::pass) return 1;
    return 0;
}
