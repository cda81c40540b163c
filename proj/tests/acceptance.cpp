// One PASS/FAIL line per acceptance criterion. Exits nonzero if any line fails.
#include "bunmot/bun.hpp"
#include "bunmot/dsl.hpp"
#include "bunmot/hn.hpp"
#include "bunmot/io.hpp"
#include "bunmot/quot.hpp"
#include "bunmot/random.hpp"

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace bunmot;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= limit_s) o.fail("took " + std::to_string(secs) + " s");
    if (!o.ok) ++failures;
    std::printf("%s %d %s (%.2f s / %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, limit_s,
                o.note.empty() ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
}

std::vector<ValidatedCurve> fixtures() {
    std::vector<ValidatedCurve> out;
    for (const auto& c : builtin_curves()) out.push_back(validate_curve(c));
    return out;
}

Outcome oracle_equivalence() {
    Outcome o;
    for (const char* name : {"p1_f2", "p1_f3", "ell_f2", "genus2_f2"}) {
        const auto c = validate_curve(builtin_curve(name));
        for (std::int64_t n = 1; n <= 3; ++n)
            for (std::int64_t N = 0; N <= 10; ++N)
                if (quot_count(n, N, c) != quot_count_oracle(n, N, c))
                    o.fail(std::string(name) + " n=" + std::to_string(n) + " N=" + std::to_string(N));
    }
    const auto p1 = validate_curve(builtin_curve("p1_f2"));
    if (quot_count(2, 1, p1) != 9) o.fail("(2,1) on P1/F2 is not 9");
    if (quot_count(2, 2, p1) != 53) o.fail("(2,2) on P1/F2 is not 53");
    return o;
}

Outcome series_equality() {
    Outcome o;
    for (const auto& c : fixtures())
        for (std::int64_t n = 1; n <= 3; ++n) {
            const auto rep = harder_vs_bd(n, c, 25);
            if (!rep.equal || rep.order < 25) o.fail(c.name() + " n=" + std::to_string(n));
        }
    for (std::int64_t n = 1; n <= 3; ++n)
        for (int g = 0; g <= 2; ++g) {
            const auto rep = compact_vs_bd(n, g, 40);
            if (!rep.equal || rep.compared == 0) o.fail("compact vs bd n=" + std::to_string(n) + " g=" + std::to_string(g));
        }
    return o;
}

Outcome convergence() {
    Outcome o;
    const auto rows = convergence_audit(2, 0, 1, validate_curve(builtin_curve("p1_f2")), 6);
    if (rows.size() != 6) {
        o.fail("wrong row count");
        return o;
    }
    const std::array<Rational, 3> r = {Rational(53, 256), Rational(1173, 4096), Rational(20821, 65536)};
    for (std::size_t i = 0; i < 3; ++i)
        if (rows[i].r != r[i]) o.fail("r_" + std::to_string(i + 1) + " = " + to_string(rows[i].r));
    for (const auto& row : rows)
        if (row.delta != abs(row.r - Rational(1, 3))) o.fail("delta at l=" + std::to_string(row.l));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (!(rows[i].delta < rows[i - 1].delta)) o.fail("delta not decreasing at l=" + std::to_string(rows[i].l));
        if (!rows[i].v || !rows[i - 1].v || !(*rows[i].v > *rows[i - 1].v))
            o.fail("valuation not increasing at l=" + std::to_string(rows[i].l));
    }
    return o;
}

Outcome duality() {
    Outcome o;
    for (std::int64_t n = 1; n <= 3; ++n)
        for (int g = 0; g <= 2; ++g) {
            const auto rep = duality_check(n, g, 30);
            if (!rep.equal || rep.compared == 0) o.fail("n=" + std::to_string(n) + " g=" + std::to_string(g));
        }
    for (int g = 0; g <= 2; ++g)
        for (std::int64_t i = 1; i <= 4; ++i) {
            const auto rep = zeta_dual_check(i, g, 30);
            if (!rep.equal || rep.compared == 0) o.fail("zeta i=" + std::to_string(i) + " g=" + std::to_string(g));
        }
    return o;
}

Outcome hn_audit() {
    Outcome o;
    std::size_t types = 0, violations = 0;
    std::int64_t worst = 0;
    std::string first;
    for (std::int64_t n = 1; n <= 4; ++n)
        for (std::int64_t d = -4; d <= 4; ++d)
            for (const auto& t : enumerate_hn(n, d, Rational(5))) {
                ++types;
                const auto k = key_inequality(t);
                if (k < 0) {
                    if (violations++ == 0) first = t.str();
                    worst = std::min(worst, k);
                }
            }
    if (types < 1000) o.fail("only " + std::to_string(types) + " types");
    if (codim_hn(HNType{{{1, 1}, {1, -1}}}, 2) != 3) o.fail("codim ((1,1),(1,-1)) g=2");
    if (codim_hn(HNType{{{2, 0}}}, 2) != 0) o.fail("codim ((2,0))");
    for (int g = 0; g <= 4; ++g)
        if (codim_hn(HNType{{{1, 1}, {1, 0}}}, g) != g) o.fail("codim ((1,1),(1,0)) g=" + std::to_string(g));
    if (violations)
        o.fail(std::to_string(violations) + " of " + std::to_string(types) + " types have a negative residual, min " +
               std::to_string(worst) + ", first " + first);
    return o;
}

Outcome stabilized_sum() {
    Outcome o;
    const auto a = stabilized_sum_identity(2, Region::vd_window({0, 20}));
    if (!a.equal || a.compared == 0) o.fail("n=2");
    const auto b = stabilized_sum_identity(3, Region::vd_window({0, 15}));
    if (!b.equal || b.compared == 0) o.fail("n=3");
    for (int g = 0; g <= 3; ++g) {
        const Region w = Region::twist_window(Interval::at_most(20));
        const auto c = compare(conj_motive(1, g, w), mul(jac_class(g), bgm_hom(w)));
        if (!c.equal || c.compared == 0) o.fail("rank one g=" + std::to_string(g));
    }
    return o;
}

Outcome tate_purity() {
    Outcome o;
    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto red = reduce_large_sym(conj_motive(n, 0, Region::twist_window(Interval::at_most(25))), 0, AssumeRationalPoint{});
        if (red.is_zero()) o.fail("empty class n=" + std::to_string(n));
        for (const auto& [t, c] : red.terms()) {
            if (!t.atom.is_unit()) o.fail("non-unit atom n=" + std::to_string(n));
            if (c < 0) o.fail("negative coefficient n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome algebra() {
    Outcome o;
    Rng rng(20241016);
    const auto curves = fixtures();
    const Region box{Interval{-30, 30}, Interval{-30, 30}};
    for (int i = 0; i < 500; ++i) {
        const auto& c = curves[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(curves.size()) - 1))];
        const int g = c.genus();
        const auto x = random_class(rng, g), y = random_class(rng, g), z = random_class(rng, g);
        bool good = (x + y).terms() == (y + x).terms() && (x * y).terms() == (y * x).terms() &&
                    ((x * y) * z).terms() == (x * (y * z)).terms() && (x * (y + z)).terms() == (x * y + x * z).terms() &&
                    dual(dual(x, g), g).terms() == x.terms();
        const auto rx = count_realize(x, c).value(), ry = count_realize(y, c).value();
        good = good && count_realize(x * y, c).value() == rx * ry && count_realize(x + y, c).value() == rx + ry;
        good = good && count_realize(reduce_large_sym(x, g, AssumeRationalPoint{}), c).value() == rx;
        const Region w = random_window(rng);
        try {
            const auto p = restrict_to(x, w) * restrict_to(y, w);
            good = good && restrict_to(p, p.window().intersect(box)).terms() == restrict_to(x * y, p.window().intersect(box)).terms();
        } catch (const Error& e) {
            good = good && e.kind() == ErrorKind::EmptyWindow;
        }
        if (!good) o.fail("case " + std::to_string(i));
    }
    return o;
}

Outcome cli_parser() {
    Outcome o;
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const auto e = random_expr(rng, 4);
        if (!(parse(render(e)) == e)) o.fail("round trip case " + std::to_string(i));
    }
    const std::string cmd = std::string(BUNMOT_EXE) + " verify all --grid small";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) {
        o.fail("cannot run " + cmd);
        return o;
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) out += buf.data();
    const int status = pclose(p);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(out);
    } catch (const std::exception&) {
        o.fail("verdict is not JSON");
        return o;
    }
    std::set<std::string> listed, failed;
    for (const auto& c : doc.at("checks")) {
        listed.insert(c.at("name").get<std::string>());
        if (!(c.at("status").get<std::string>() == "pass")) failed.insert(c.at("name").get<std::string>());
    }
    for (const char* name : {"quot_oracle_equivalence", "harder_equals_bd_series", "compact_motive_equals_bd_class",
                             "convergence_p1_f2", "duality_conj_compact", "zeta_duality", "hn_key_inequality",
                             "hn_codimension", "stabilized_sum_identity", "tate_purity_g0", "algebra_properties",
                             "parser_round_trip"})
        if (!listed.count(name)) o.fail(std::string("verdict does not list ") + name);
    if (code != 0) {
        std::string names;
        for (const auto& n : failed) names += (names.empty() ? "" : ", ") + n;
        o.fail("verify all exited " + std::to_string(code) + " (failing: " + names + ")");
    }
    return o;
}

} // namespace

int main() {
    criterion(1, "quot count equals the series oracle", 5, oracle_equivalence);
    criterion(2, "closed count equals the class series; compact class equals bd class", 10, series_equality);
    criterion(3, "convergence on P1/F2", 5, convergence);
    criterion(4, "duality suite", 5, duality);
    criterion(5, "HN key inequality and codimension examples", 30, hn_audit);
    criterion(6, "stabilized sum and rank one class", 5, stabilized_sum);
    criterion(7, "Tate purity in genus 0", 2, tate_purity);
    criterion(8, "algebra properties", 30, algebra);
    criterion(9, "parser round trip and verify all", 60, cli_parser);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures ? 1 : 0;
}
