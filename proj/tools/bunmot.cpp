// bunmot: command-line front end for the class calculator and the verification suite.

#include "bunmot/bun.hpp"
#include "bunmot/dsl.hpp"
#include "bunmot/error.hpp"
#include "bunmot/hn.hpp"
#include "bunmot/io.hpp"
#include "bunmot/quot.hpp"
#include "bunmot/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>

using namespace bunmot;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kData = 3 };

struct Options {
    std::string curve;
    bool json_out = false;
    std::int64_t n = 1, N = 0, d = 0, d0 = 1, g = 0, j = 0, l_max = 6, trunc = 20;
    std::string mu_max = "5";
    std::string expr, vd_window, twist_window, grid = "small";
    bool oracle = false, realize_flag = false, compact = false;
    std::optional<int> genus;
};

/// "LO:HI" with either side empty for an unbounded end.
Interval parse_interval(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::InvalidArgument, "window '" + s + "' must look like LO:HI");
    auto end = [&](const std::string& part, Ext inf) -> Ext {
        if (part.empty()) return inf;
        try {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return Ext(static_cast<std::int64_t>(v));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad window bound '" + part + "'");
        }
    };
    return {end(s.substr(0, colon), Ext::neg_inf()), end(s.substr(colon + 1), Ext::pos_inf())};
}

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        r.canonicalize();
        return r;
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidArgument, "'" + s + "' is not a rational number");
    }
}

ValidatedCurve need_curve(const Options& o) {
    if (o.curve.empty()) throw Error(ErrorKind::InvalidArgument, "--curve is required");
    return resolve_curve(o.curve);
}

void emit(const Options& o, const json& j, const std::string& human) {
    if (o.json_out)
        std::cout << j.dump() << "\n";
    else
        std::cout << human << "\n";
}

int cmd_curve_validate(const Options& o) {
    const auto c = need_curve(o);
    json j = curve_to_json(c.data());
    j["valid"] = true;
    j["jac_count"] = to_json(jac_count(c));
    j["warnings"] = c.warnings();
    std::string human = c.name() + ": valid (g=" + std::to_string(c.genus()) + ", q=" + c.q().get_str() +
                        ", |Jac| = " + jac_count(c).get_str() + ")";
    for (const auto& w : c.warnings()) human += "\nwarning: " + w;
    emit(o, j, human);
    return kOk;
}

int cmd_count_sym(const Options& o) {
    const auto c = need_curve(o);
    const auto v = sym_count(c, o.j);
    emit(o, {{"curve", c.name()}, {"j", o.j}, {"count", to_json(v)}}, v.get_str());
    return kOk;
}

int cmd_quot_count(const Options& o) {
    const auto c = need_curve(o);
    const auto v = o.oracle ? quot_count_oracle(o.n, o.N, c) : quot_count(o.n, o.N, c);
    emit(o, {{"curve", c.name()}, {"n", o.n}, {"N", o.N}, {"method", o.oracle ? "oracle" : "bb"}, {"count", to_json(v)}},
         v.get_str());
    return kOk;
}

int cmd_quot_strata(const Options& o) {
    const auto c = need_curve(o);
    for (const auto& s : strata_counts(o.n, o.N, c)) std::cout << to_json(s).dump() << "\n";
    return kOk;
}

int cmd_bun_harder(const Options& o) {
    const auto c = need_curve(o);
    const auto v = harder_count(o.n, c);
    emit(o, {{"curve", c.name()}, {"n", o.n}, {"count", to_string(v)}, {"label", "THEOREM"}}, to_string(v));
    return kOk;
}

int cmd_bun_bd(const Options& o) {
    const int g = o.curve.empty() ? static_cast<int>(o.g) : need_curve(o).genus();
    const MotClass x = bd_class(o.n, g, Region::vd_window(Interval::at_least(-o.trunc)));
    json j{{"n", o.n}, {"g", g}, {"class", to_json(x)}, {"label", "THEOREM"}};
    std::string human = to_text(x);
    if (!o.curve.empty()) {
        const auto c = need_curve(o);
        const auto s = count_realize(x, c);
        j["realization"] = to_json(s);
        j["harder_count"] = to_string(harder_count(o.n, c));
        human += "\nrealized through q^-" + std::to_string(o.trunc) + ": " + to_string(s.value()) +
                 " (closed form " + to_string(harder_count(o.n, c)) + ")";
    }
    emit(o, j, human);
    return kOk;
}

int cmd_bun_conjecture(const Options& o) {
    const int g = static_cast<int>(o.g);
    const MotClass x = o.compact ? compact_motive(o.n, g, Region::vd_window(Interval::at_least(-o.trunc)))
                                 : conj_motive(o.n, g, Region::twist_window(Interval::at_most(o.trunc)));
    emit(o, {{"n", o.n}, {"g", g}, {"compact", o.compact}, {"class", to_json(x)}, {"label", "CONJECTURAL"}}, to_text(x));
    return kOk;
}

int cmd_bun_convergence(const Options& o) {
    const auto c = need_curve(o);
    const auto rows = convergence_audit(o.n, o.d, o.d0, c, o.l_max);
    json table = json::array();
    std::string human = "l\tN\trank\tr_l\tdelta_l\tv_l";
    for (const auto& r : rows) {
        const json v = r.v ? json(*r.v) : json(nullptr);
        table.push_back({{"l", r.l}, {"N", r.N}, {"rank", r.rank}, {"quot_count", to_json(r.quot)},
                         {"r", to_string(r.r)}, {"delta", to_string(r.delta)}, {"v", v}});
        human += "\n" + std::to_string(r.l) + "\t" + std::to_string(r.N) + "\t" + std::to_string(r.rank) + "\t" +
                 to_string(r.r) + "\t" + to_string(r.delta) + "\t" + (r.v ? std::to_string(*r.v) : "-");
    }
    const auto limit = to_string(harder_count(o.n, c));
    emit(o, {{"curve", c.name()}, {"n", o.n}, {"d", o.d}, {"d0", o.d0}, {"limit", limit}, {"rows", table}},
         human + "\nlimit " + limit);
    return kOk;
}

int cmd_hn_enumerate(const Options& o) {
    const auto types = enumerate_hn(o.n, o.d, parse_rational(o.mu_max));
    json list = json::array();
    std::string human;
    for (const auto& t : types) {
        list.push_back(to_json(t));
        human += (human.empty() ? "" : "\n") + t.str();
    }
    emit(o, {{"n", o.n}, {"d", o.d}, {"mu_max", o.mu_max}, {"types", list}}, human);
    return kOk;
}

int cmd_hn_audit(const Options& o) {
    for (const auto& t : enumerate_hn(o.n, o.d, parse_rational(o.mu_max))) {
        std::cout << json{{"blocks", to_json(t)},
                          {"codim", codim_hn(t, o.g)},
                          {"h1_upper", h1_upper(t, o.g)},
                          {"defect", defect(t, o.g)},
                          {"key_inequality_residual", key_inequality(t)}}
                         .dump()
                  << "\n";
    }
    return kOk;
}

int cmd_eval(const Options& o) {
    const Expr e = parse(o.expr);
    if (o.realize_flag) {
        const auto c = need_curve(o);
        const auto s = realize(e, c, o.trunc);
        std::string human;
        for (const auto& [k, v] : s.coefficients())
            human += (human.empty() ? "" : " + ") + to_string(v) + "*q^" + std::to_string(-k);
        if (human.empty()) human = "0";
        human += "\nvalue " + to_string(s.value());
        emit(o, {{"expr", render(e)}, {"curve", c.name()}, {"series", to_json(s)}}, human);
        return kOk;
    }
    std::optional<int> genus = o.genus;
    if (!genus && !o.curve.empty()) genus = need_curve(o).genus();
    Region window;
    if (!o.vd_window.empty()) window.vd = parse_interval(o.vd_window);
    if (!o.twist_window.empty()) window.twist = parse_interval(o.twist_window);
    const MotClass x = eval(e, genus, window);
    emit(o, {{"expr", render(e)}, {"class", to_json(x)}}, to_text(x));
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto grid = parse_grid(o.grid);
    const auto checks = run_all_checks(grid);
    const auto doc = verdict(grid, checks);
    std::cout << doc.dump(2) << "\n";
    return doc.at("all_pass").get<bool>() ? kOk : kVerifyFailed;
}

int exit_code(const Error& e) {
    switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnboundGenus:
    case ErrorKind::InvalidArgument:
        return kUsage;
    default:
        return kData;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact class and point-count calculator for moduli of bundles on curves"};
    app.name("bunmot");
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> run;

    auto curve_opt = [&](CLI::App* sub) { sub->add_option("--curve", o.curve, "curve profile file or built-in name"); };
    auto common = [&](CLI::App* sub) { sub->add_flag("--json", o.json_out, "machine-readable output"); };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<int(const Options&)> f) {
        auto* sub = parent->add_subcommand(name, help);
        common(sub);
        sub->callback([&run, f] { run = f; });
        return sub;
    };

    auto* curve = app.add_subcommand("curve", "curve profiles")->require_subcommand(1);
    curve_opt(leaf(curve, "validate", "check Weil data", cmd_curve_validate));

    auto* count = app.add_subcommand("count", "point counts")->require_subcommand(1);
    auto* sym = leaf(count, "sym", "|C^(j)(F_q)|", cmd_count_sym);
    curve_opt(sym);
    sym->add_option("--j", o.j, "symmetric power")->required();

    auto* quot = app.add_subcommand("quot", "Quot scheme strata")->require_subcommand(1);
    auto* qc = leaf(quot, "count", "point count of Div_{n,d}(D)", cmd_quot_count);
    curve_opt(qc);
    qc->add_option("--n", o.n)->required();
    qc->add_option("--N", o.N, "n deg D - d")->required();
    qc->add_flag("--oracle", o.oracle, "count through symmetric powers of C x P^{n-1}");
    auto* qs = leaf(quot, "strata", "one JSON line per stratum", cmd_quot_strata);
    curve_opt(qs);
    qs->add_option("--n", o.n)->required();
    qs->add_option("--N", o.N)->required();

    auto* bun = app.add_subcommand("bun", "formulas for Bun_{n,d}")->require_subcommand(1);
    auto* bh = leaf(bun, "harder", "stacky point count (independent of d)", cmd_bun_harder);
    curve_opt(bh);
    bh->add_option("--n", o.n)->required();
    auto* bb = leaf(bun, "bd", "Behrend-Dhillon class on vd >= -T", cmd_bun_bd);
    curve_opt(bb);
    bb->add_option("--n", o.n)->required();
    bb->add_option("--g", o.g, "genus when no curve is given");
    bb->add_option("--trunc", o.trunc, "T");
    auto* bc = leaf(bun, "conjecture", "conjectural motive on twist <= T (compact: vd >= -T)", cmd_bun_conjecture);
    bc->add_option("--n", o.n)->required();
    bc->add_option("--g", o.g)->required();
    bc->add_option("--trunc", o.trunc, "T");
    bc->add_flag("--compact", o.compact, "compactly supported version");
    auto* bv = leaf(bun, "convergence", "Quot-scheme approximation audit", cmd_bun_convergence);
    curve_opt(bv);
    bv->add_option("--n", o.n)->required();
    bv->add_option("--d", o.d)->required();
    bv->add_option("--d0", o.d0);
    bv->add_option("--lmax", o.l_max);

    auto* hn = app.add_subcommand("hn", "Harder-Narasimhan types")->require_subcommand(1);
    auto* he = leaf(hn, "enumerate", "HN types with mu_1 <= mu-max", cmd_hn_enumerate);
    he->add_option("--n", o.n)->required();
    he->add_option("--d", o.d)->required();
    he->add_option("--mu-max", o.mu_max, "rational bound, e.g. 5 or 7/2");
    auto* ha = leaf(hn, "audit", "per-type JSON records", cmd_hn_audit);
    ha->add_option("--n", o.n)->required();
    ha->add_option("--d", o.d)->required();
    ha->add_option("--mu-max", o.mu_max);
    ha->add_option("--g", o.g)->required();

    auto* ev = leaf(&app, "eval", "evaluate a class expression", cmd_eval);
    ev->add_option("expr", o.expr, "expression")->required();
    ev->add_option("--g", o.genus, "genus binding for Jac and dual");
    ev->add_option("--vd", o.vd_window, "vd window LO:HI (either end may be empty)");
    ev->add_option("--twist", o.twist_window, "twist window LO:HI");
    ev->add_flag("--realize", o.realize_flag, "point count on vd, twist >= -T");
    ev->add_option("--trunc", o.trunc, "T");
    curve_opt(ev);

    auto* verify = app.add_subcommand("verify", "run the verification suite")->require_subcommand(1);
    auto* va = verify->add_subcommand("all", "every check, JSON verdict");
    va->add_option("--grid", o.grid, "small or full")->check(CLI::IsMember({"small", "full"}));
    va->callback([&run] { run = cmd_verify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return run(o);
    } catch (const Error& e) {
        std::cerr << "bunmot: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "bunmot: " << e.what() << "\n";
        return kData;
    }
}
