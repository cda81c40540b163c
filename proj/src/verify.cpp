#include "bunmot/verify.hpp"

#include "bunmot/bun.hpp"
#include "bunmot/dsl.hpp"
#include "bunmot/error.hpp"
#include "bunmot/hn.hpp"
#include "bunmot/io.hpp"
#include "bunmot/quot.hpp"
#include "bunmot/random.hpp"

#include <chrono>
#include <functional>

namespace bunmot {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

const char* const kTheorem = "THEOREM";
const char* const kConjectural = "CONJECTURAL";

std::vector<ValidatedCurve> fixtures() {
    std::vector<ValidatedCurve> out;
    for (const auto& c : builtin_curves()) out.push_back(validate_curve(c));
    return out;
}

void fail_with(CheckResult& r, nlohmann::json witness) {
    r.pass = false;
    auto& list = r.witnesses["failures"];
    if (!list.is_array()) list = nlohmann::json::array();
    if (list.size() < kMaxWitnesses) list.push_back(std::move(witness));
}

std::string term_text(const std::optional<Term>& t) {
    if (!t) return "";
    return to_text(MotClass::exact({{*t, 1}}, 0));
}

CheckResult timed(const std::function<CheckResult()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

Grid parse_grid(const std::string& name) {
    if (name == "small") return Grid::Small;
    if (name == "full") return Grid::Full;
    throw Error(ErrorKind::InvalidArgument, "grid must be 'small' or 'full'");
}

std::string to_string(Grid g) { return g == Grid::Small ? "small" : "full"; }

nlohmann::json CheckResult::to_json() const {
    return {{"name", name},     {"status", pass ? "pass" : "fail"}, {"label", label},
            {"params", params}, {"witnesses", witnesses},          {"seconds", seconds}};
}

CheckResult check_quot_oracle(Grid grid) {
    CheckResult r{"quot_oracle_equivalence", true, kTheorem};
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    const std::int64_t N_max = grid == Grid::Small ? 10 : 14;
    r.params = {{"n", {1, n_max}}, {"N", {0, N_max}}, {"curves", "all fixtures"}};
    std::size_t cases = 0;
    for (const auto& c : fixtures()) {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            for (std::int64_t N = 0; N <= N_max; ++N, ++cases) {
                const auto a = quot_count(n, N, c);
                const auto b = quot_count_oracle(n, N, c);
                if (a != b)
                    fail_with(r, {{"curve", c.name()}, {"n", n}, {"N", N}, {"bb", a.get_str()}, {"oracle", b.get_str()}});
            }
        }
    }
    const auto p1 = validate_curve(builtin_curve("p1_f2"));
    const auto v1 = quot_count(2, 1, p1);
    const auto v2 = quot_count(2, 2, p1);
    if (v1 != 9 || v2 != 53) fail_with(r, {{"hand_values", {v1.get_str(), v2.get_str()}}});
    r.witnesses["cases"] = cases;
    r.witnesses["p1_f2 (n,N)=(2,1),(2,2)"] = {v1.get_si(), v2.get_si()};
    return r;
}

CheckResult check_harder_vs_bd(Grid grid) {
    CheckResult r{"harder_equals_bd_series", true, kTheorem};
    const std::int64_t T = 25;
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    r.params = {{"n", {1, n_max}}, {"T", T}, {"curves", "all fixtures"}};
    std::size_t cases = 0;
    for (const auto& c : fixtures()) {
        for (std::int64_t n = 1; n <= n_max; ++n, ++cases) {
            const auto rep = harder_vs_bd(n, c, T);
            if (!rep.equal) fail_with(r, {{"curve", c.name()}, {"n", n}, {"first_mismatch_exponent", *rep.first_mismatch}});
        }
    }
    r.witnesses["cases"] = cases;
    return r;
}

CheckResult check_compact_vs_bd(Grid grid) {
    CheckResult r{"compact_motive_equals_bd_class", true, kConjectural};
    const std::int64_t width = 40;
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    const int g_max = grid == Grid::Small ? 2 : 3;
    r.params = {{"n", {1, n_max}}, {"g", {0, g_max}}, {"width", width}};
    std::size_t terms = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (int g = 0; g <= g_max; ++g) {
            const auto rep = compact_vs_bd(n, g, width);
            terms += rep.compared;
            if (!rep.equal) fail_with(r, {{"n", n}, {"g", g}, {"first_mismatch", term_text(rep.first_mismatch)}});
        }
    }
    r.witnesses["terms_compared"] = terms;
    return r;
}

CheckResult check_convergence_p1(Grid) {
    CheckResult r{"convergence_p1_f2", true, kTheorem};
    r.params = {{"n", 2}, {"d", 0}, {"d0", 1}, {"curve", "p1_f2"}, {"l", {1, 6}}};
    const auto c = validate_curve(builtin_curve("p1_f2"));
    const auto rows = convergence_audit(2, 0, 1, c, 6);
    const std::vector<Rational> expected{Rational(53, 256), Rational(1173, 4096), Rational(20821, 65536)};
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        table.push_back({{"l", row.l}, {"r", to_string(row.r)}, {"delta", to_string(row.delta)},
                         {"v", row.v ? nlohmann::json(*row.v) : nlohmann::json(nullptr)}});
        if (i < expected.size() && row.r != expected[i])
            fail_with(r, {{"l", row.l}, {"r", to_string(row.r)}, {"expected", to_string(expected[i])}});
        if (i > 0 && !(row.delta < rows[i - 1].delta)) fail_with(r, {{"delta_not_decreasing_at", row.l}});
        if (row.l >= 3 && (!row.v || !rows[i - 1].v || *row.v <= *rows[i - 1].v))
            fail_with(r, {{"valuation_not_increasing_at", row.l}});
    }
    r.witnesses["limit"] = to_string(harder_count(2, c));
    r.witnesses["table"] = table;
    return r;
}

CheckResult check_convergence_fixtures(Grid grid) {
    CheckResult r{"convergence_all_fixtures", true, kTheorem};
    const std::int64_t l_max = grid == Grid::Small ? 6 : 8;
    const std::vector<std::int64_t> ds = grid == Grid::Small ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{0, -1};
    r.params = {{"n", {1, 3}}, {"d", ds}, {"d0", 1}, {"l", {1, l_max}}, {"curves", "all fixtures"},
                {"claims", "delta strictly decreasing; v strictly increasing for l >= 2"}};
    std::size_t audits = 0;
    for (const auto& c : fixtures()) {
        for (std::int64_t n = 1; n <= 3; ++n) {
            for (auto d : ds) {
                const auto rows = convergence_audit(n, d, 1, c, l_max);
                ++audits;
                for (std::size_t i = 1; i < rows.size(); ++i) {
                    if (!(rows[i].delta < rows[i - 1].delta))
                        fail_with(r, {{"curve", c.name()}, {"n", n}, {"d", d}, {"delta_not_decreasing_at", rows[i].l}});
                    if (rows[i].l >= 3 && (!rows[i].v || !rows[i - 1].v || *rows[i].v <= *rows[i - 1].v))
                        fail_with(r, {{"curve", c.name()}, {"n", n}, {"d", d}, {"valuation_not_increasing_at", rows[i].l}});
                }
            }
        }
    }
    r.witnesses["audits"] = audits;
    return r;
}

CheckResult check_duality(Grid grid) {
    CheckResult r{"duality_conj_compact", true, kConjectural};
    const std::int64_t width = 30;
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    const int g_max = grid == Grid::Small ? 2 : 3;
    r.params = {{"n", {1, n_max}}, {"g", {0, g_max}}, {"width", width}};
    std::size_t terms = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (int g = 0; g <= g_max; ++g) {
            const auto rep = duality_check(n, g, width);
            terms += rep.compared;
            if (!rep.equal)
                fail_with(r, {{"n", n}, {"g", g}, {"compared", rep.compared}, {"first_mismatch", term_text(rep.first_mismatch)}});
        }
    }
    r.witnesses["terms_compared"] = terms;
    return r;
}

CheckResult check_zeta_duality(Grid grid) {
    CheckResult r{"zeta_duality", true, kTheorem};
    const std::int64_t width = grid == Grid::Small ? 30 : 40;
    const std::int64_t i_max = grid == Grid::Small ? 4 : 6;
    r.params = {{"i", {1, i_max}}, {"g", {0, 2}}, {"width", width}};
    std::size_t terms = 0;
    for (std::int64_t i = 1; i <= i_max; ++i) {
        for (int g = 0; g <= 2; ++g) {
            const auto rep = zeta_dual_check(i, g, width);
            terms += rep.compared;
            if (!rep.equal) fail_with(r, {{"i", i}, {"g", g}, {"first_mismatch", term_text(rep.first_mismatch)}});
        }
    }
    // dual(BG_m){-1} = BG_m^c on the compact side
    const MotClass lhs = twist(dual(bgm_hom(Region::twist_window(Interval::at_most(width))), 0), -1);
    const MotClass rhs = bgm_k0(Region::vd_window(Interval::at_least(-width - 1)));
    const auto cmp = compare(lhs, rhs);
    if (!cmp.equal || cmp.compared == 0) fail_with(r, {{"bgm", "dual(bgm_hom){-1} != bgm_k0"}});
    r.witnesses["terms_compared"] = terms + cmp.compared;
    return r;
}

namespace {

struct HNGrid {
    std::int64_t n_max = 4;
    std::int64_t d_abs = 4;
    Rational bound = 5;
};

HNGrid hn_grid(Grid grid) {
    return grid == Grid::Small ? HNGrid{} : HNGrid{5, 5, 6};
}

void for_each_hn(const HNGrid& h, const std::function<void(std::int64_t, std::int64_t, const HNType&)>& f) {
    for (std::int64_t n = 1; n <= h.n_max; ++n)
        for (std::int64_t d = -h.d_abs; d <= h.d_abs; ++d)
            for (const auto& t : enumerate_hn(n, d, h.bound)) f(n, d, t);
}

nlohmann::json hn_params(const HNGrid& h) {
    return {{"n", {1, h.n_max}}, {"d", {-h.d_abs, h.d_abs}}, {"mu_max", to_string(h.bound)}};
}

} // namespace

CheckResult check_hn_key_inequality(Grid grid) {
    CheckResult r{"hn_key_inequality", true, kTheorem};
    const auto h = hn_grid(grid);
    r.params = hn_params(h);
    r.params["claim"] = "key_inequality(tau) >= 0";
    std::size_t types = 0;
    std::size_t violations = 0;
    std::int64_t worst = 0;
    for_each_hn(h, [&](std::int64_t n, std::int64_t d, const HNType& t) {
        ++types;
        const auto res = key_inequality(t);
        if (res < 0) {
            ++violations;
            worst = std::min(worst, res);
            fail_with(r, {{"type", to_json(t)}, {"n", n}, {"d", d}, {"residual", res}});
        }
    });
    r.witnesses["types"] = types;
    r.witnesses["violations"] = violations;
    r.witnesses["min_residual"] = worst;
    return r;
}

CheckResult check_hn_key_inequality_corrected(Grid grid) {
    CheckResult r{"hn_key_inequality_corrected", true, kTheorem};
    const auto h = hn_grid(grid);
    r.params = hn_params(h);
    r.params["claim"] = "key_inequality(tau) - n*d + n*max(d,0) >= 0";
    std::size_t types = 0;
    std::size_t tight = 0;
    for_each_hn(h, [&](std::int64_t n, std::int64_t d, const HNType& t) {
        ++types;
        const auto res = key_inequality(t) - n * d + n * std::max<std::int64_t>(d, 0);
        if (res == 0) ++tight;
        if (res < 0) fail_with(r, {{"type", to_json(t)}, {"n", n}, {"d", d}, {"residual", res}});
    });
    r.witnesses["types"] = types;
    r.witnesses["tight"] = tight;
    return r;
}

CheckResult check_hn_codim(Grid grid) {
    CheckResult r{"hn_codimension", true, kTheorem};
    const auto h = hn_grid(grid);
    r.params = hn_params(h);
    r.params["g"] = {0, 3};
    const HNType a{{{1, 1}, {1, -1}}};
    const HNType b{{{1, 1}, {1, 0}}};
    const HNType triv{{{2, 0}}};
    nlohmann::json hand = nlohmann::json::array();
    if (codim_hn(a, 2) != 3) fail_with(r, {{"example", "((1,1),(1,-1)), g=2"}, {"got", codim_hn(a, 2)}});
    hand.push_back(codim_hn(a, 2));
    if (codim_hn(triv, 2) != 0) fail_with(r, {{"example", "((2,0))"}, {"got", codim_hn(triv, 2)}});
    hand.push_back(codim_hn(triv, 2));
    for (int g = 0; g <= 3; ++g)
        if (codim_hn(b, g) != g) fail_with(r, {{"example", "((1,1),(1,0))"}, {"g", g}, {"got", codim_hn(b, g)}});
    hand.push_back(codim_hn(b, 3));
    r.witnesses["hand_values"] = hand;
    std::size_t types = 0;
    for_each_hn(h, [&](std::int64_t n, std::int64_t, const HNType& t) {
        ++types;
        std::int64_t cross = 0;
        for (std::size_t i = 0; i < t.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < t.blocks.size(); ++j)
                cross += t.blocks[j].rank * t.blocks[i].degree - t.blocks[i].rank * t.blocks[j].degree;
        if (codim_hn(t, 0) < cross - n * n) fail_with(r, {{"type", to_json(t)}, {"g", 0}, {"sanity_bound", cross - n * n}});
        for (int g = 1; g <= 3; ++g) {
            const auto c = codim_hn(t, g);
            if (c < 0) fail_with(r, {{"type", to_json(t)}, {"g", g}, {"codim", c}});
            if (g >= 2 && c == 0 && t.blocks.size() != 1) fail_with(r, {{"type", to_json(t)}, {"g", g}, {"zero_codim", true}});
        }
    });
    r.witnesses["types"] = types;
    return r;
}

CheckResult check_hn_defect(Grid grid) {
    CheckResult r{"hn_defect_grid", true, kTheorem};
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    const std::int64_t m_max = grid == Grid::Small ? 8 : 10;
    const std::int64_t stable_from = m_max - 4;
    r.params = {{"n", {1, n_max}}, {"d", {-2, 2}}, {"g", {0, 3}}, {"mu_max", {0, m_max}},
                {"claim", "min defect over mu_1 <= M is constant for M >= " + std::to_string(stable_from)}};
    nlohmann::json bounds = nlohmann::json::object();
    for (std::int64_t n = 1; n <= n_max; ++n) {
        for (std::int64_t g = 0; g <= 3; ++g) {
            std::int64_t B = INT64_MIN;
            for (std::int64_t d = -2; d <= 2; ++d) {
                std::vector<std::int64_t> mins;
                for (std::int64_t M = 0; M <= m_max; ++M) {
                    std::int64_t m = INT64_MAX;
                    for (const auto& t : enumerate_hn(n, d, M)) {
                        const auto df = defect(t, g);
                        m = std::min(m, df);
                        B = std::max(B, -df - n * (d < 0 ? -d : d));
                    }
                    mins.push_back(m);
                }
                for (auto M = stable_from + 1; M <= m_max; ++M)
                    if (mins[static_cast<std::size_t>(M)] != mins[static_cast<std::size_t>(stable_from)])
                        fail_with(r, {{"n", n}, {"d", d}, {"g", g}, {"min_defect_by_M", mins}});
            }
            bounds["n=" + std::to_string(n) + ",g=" + std::to_string(g)] = B;
        }
    }
    r.witnesses["B(n,g)"] = bounds;
    return r;
}

CheckResult check_stabilized_sum(Grid) {
    CheckResult r{"stabilized_sum_identity", true, kTheorem};
    r.params = {{"cases", {{{"n", 1}, {"vd", {0, 20}}}, {{"n", 2}, {"vd", {0, 20}}}, {{"n", 3}, {"vd", {0, 15}}}}}};
    std::size_t terms = 0;
    for (auto [n, hi] : {std::pair<std::int64_t, std::int64_t>{1, 20}, {2, 20}, {3, 15}}) {
        const auto rep = stabilized_sum_identity(n, Region::vd_window({0, hi}));
        terms += rep.compared;
        if (!rep.equal || rep.compared == 0) fail_with(r, {{"n", n}, {"first_mismatch", term_text(rep.first_mismatch)}});
    }
    r.witnesses["terms_compared"] = terms;
    return r;
}

CheckResult check_bun1_consistency(Grid) {
    CheckResult r{"bun1_consistency", true, kTheorem};
    r.params = {{"g", {0, 3}}, {"twist", "<= 30"}};
    std::size_t terms = 0;
    for (int g = 0; g <= 3; ++g) {
        const Region w = Region::twist_window(Interval::at_most(30));
        const MotClass conj = conj_motive(1, g, w);
        const MotClass direct = restrict_to(mul(jac_class(g), bgm_hom(w)), w);
        const MotClass piece = stabilized_piece({}, g, w);
        const auto a = compare(conj, direct);
        const auto b = compare(conj, piece);
        terms += a.compared;
        if (!a.equal || !b.equal || a.compared == 0) fail_with(r, {{"g", g}});
    }
    r.witnesses["terms_compared"] = terms;
    return r;
}

CheckResult check_tate_purity(Grid grid) {
    CheckResult r{"tate_purity_g0", true, kTheorem};
    const std::int64_t n_max = grid == Grid::Small ? 3 : 4;
    r.params = {{"n", {1, n_max}}, {"g", 0}, {"twist", "<= 25"}};
    std::size_t terms = 0;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const MotClass x = conj_motive(n, 0, Region::twist_window(Interval::at_most(25)));
        const MotClass red = reduce_large_sym(x, 0, AssumeRationalPoint{});
        terms += red.size();
        if (red.is_zero()) fail_with(r, {{"n", n}, {"empty", true}});
        for (const auto& [t, c] : red.terms()) {
            if (!t.atom.is_unit() || c < 0) {
                fail_with(r, {{"n", n}, {"term", term_text(t)}, {"coefficient", c.get_str()}});
                break;
            }
        }
    }
    r.witnesses["reduced_terms"] = terms;
    return r;
}

CheckResult check_fixed_det_relations(Grid) {
    CheckResult r{"fixed_det_and_sln_relations", true, kConjectural};
    const Region hom = Region::twist_window(Interval::at_most(20));
    const std::int64_t T = 20;
    r.params = {{"n", {1, 3}}, {"g", {0, 2}}, {"twist", "<= 20"}, {"T", T}};
    for (std::int64_t n = 1; n <= 3; ++n) {
        for (int g = 0; g <= 2; ++g) {
            const auto a = compare(conj_motive(n, g, hom), mul(jac_class(g), fixed_det_motive(n, hom)));
            if (!a.equal || a.compared == 0) fail_with(r, {{"relation", "conj = Jac * fixed_det"}, {"n", n}, {"g", g}});
            const auto b = compare(fixed_det_motive(n, hom), mul(bgm_hom(hom), sln_motive(n, hom)));
            if (!b.equal || b.compared == 0) fail_with(r, {{"relation", "fixed_det = BGm * sln"}, {"n", n}, {"g", g}});
        }
    }
    for (const auto& c : fixtures()) {
        const auto q_minus_one = LaurentQ::monomial(c.q(), -1, 1) - LaurentQ::monomial(c.q(), 0, 1);
        for (std::int64_t n = 1; n <= 3; ++n) {
            const Region k0 = Region::vd_window(Interval::at_least(-T));
            const auto fd = count_realize(compact_fixed_det_motive(n, c.genus(), k0), c);
            const auto sl = count_realize(compact_sln_motive(n, c.genus(), k0), c);
            if (!agree(q_minus_one * fd, sl)) fail_with(r, {{"relation", "(q-1) fixed_det^c = sln^c"}, {"curve", c.name()}, {"n", n}});
        }
    }
    return r;
}

CheckResult check_transition_codim(Grid grid) {
    CheckResult r{"transition_codim", true, kConjectural};
    const int cases = grid == Grid::Small ? 1000 : 5000;
    r.params = {{"cases", cases}, {"seed", 11}};
    Rng rng(11);
    for (int i = 0; i < cases; ++i) {
        const auto n = uniform(rng, 1, 5);
        Composition m;
        for (std::int64_t k = 0; k < n; ++k) m.push_back(uniform(rng, 0, 6));
        const auto delta = uniform(rng, 1, 4);
        try {
            const auto target = transition_target(m, delta, n);
            if (target[0] != m[0] + n * delta) fail_with(r, {{"comp", m}, {"delta", delta}});
        } catch (const Error& e) {
            fail_with(r, {{"comp", m}, {"delta", delta}, {"error", e.what()}});
        }
    }
    const auto t = transition_target({1, 2}, 1, 2);
    r.witnesses["(1,2) delta=1"] = {{"target", t}, {"codim", stratum(t).codim_plus}};
    return r;
}

CheckResult check_algebra_properties(Grid, std::uint64_t seed, int cases) {
    CheckResult r{"algebra_properties", true, kTheorem};
    r.params = {{"cases", cases}, {"seed", seed}};
    Rng rng(seed);
    const auto curves = fixtures();
    std::map<std::string, std::size_t> checked;
    std::size_t skipped = 0;
    for (int i = 0; i < cases; ++i) {
        const int g = static_cast<int>(uniform(rng, 0, 2));
        std::vector<const ValidatedCurve*> pool;
        for (const auto& c : curves)
            if (c.genus() == g) pool.push_back(&c);
        const ValidatedCurve& c = *pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(pool.size()) - 1))];
        const MotClass x = random_class(rng, g);
        const MotClass y = random_class(rng, g);
        const MotClass z = random_class(rng, g);
        const Region w1 = random_window(rng);
        const Region w2 = random_window(rng);
        const Region w3 = random_window(rng);
        auto law = [&](const std::string& name, const std::function<bool()>& holds) {
            try {
                ++checked[name];
                if (!holds())
                    fail_with(r, {{"case", i}, {"law", name}, {"x", to_text(x)}, {"y", to_text(y)}, {"z", to_text(z)}});
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::EmptyWindow && e.kind() != ErrorKind::WindowUnboundedMismatch) throw;
                --checked[name];
                ++skipped;
            }
        };
        auto same = [](const MotClass& a, const MotClass& b) { return compare(a, b).equal; };
        law("add_associative", [&] { return same(add(add(x, y), z), add(x, add(y, z))); });
        law("add_commutative", [&] { return same(add(x, y), add(y, x)); });
        law("mul_associative", [&] { return same(mul(mul(x, y), z), mul(x, mul(y, z))); });
        law("mul_commutative", [&] { return same(mul(x, y), mul(y, x)); });
        law("distributive", [&] { return same(mul(x, add(y, z)), add(mul(x, y), mul(x, z))); });
        law("unit", [&] { return same(mul(unit_class(), x), x); });
        law("windowed_mul_sound", [&] { return same(mul(restrict_to(x, w1), restrict_to(y, w2)), mul(x, y)); });
        law("windowed_add_sound", [&] { return same(add(restrict_to(x, w1), restrict_to(y, w2)), add(x, y)); });
        law("windowed_mul_associative", [&] {
            const auto xw = restrict_to(x, w1), yw = restrict_to(y, w2), zw = restrict_to(z, w3);
            return same(mul(mul(xw, yw), zw), mul(xw, mul(yw, zw)));
        });
        law("windowed_distributive", [&] {
            const auto xw = restrict_to(x, w1), yw = restrict_to(y, w2), zw = restrict_to(z, w3);
            return same(mul(xw, add(yw, zw)), add(mul(xw, yw), mul(xw, zw)));
        });
        law("dual_involution", [&] {
            const auto d = dual(dual(x, g), g);
            return same(d, x) && d.window() == x.window();
        });
        law("windowed_dual_involution", [&] {
            const auto xw = restrict_to(x, w1);
            const auto d = dual(dual(xw, g), g);
            return same(d, xw) && d.window() == xw.window();
        });
        law("dual_multiplicative", [&] { return same(dual(mul(x, y), g), mul(dual(x, g), dual(y, g))); });
        law("windowed_dual_sound", [&] { return same(dual(restrict_to(x, w1), g), dual(x, g)); });
        law("realize_mul", [&] { return agree(count_realize(mul(x, y), c), count_realize(x, c) * count_realize(y, c)); });
        law("realize_add", [&] { return agree(count_realize(add(x, y), c), count_realize(x, c) + count_realize(y, c)); });
        law("windowed_realize_mul", [&] {
            const auto xw = restrict_to(x, w1), yw = restrict_to(y, w2);
            return agree(count_realize(mul(xw, yw), c), count_realize(xw, c) * count_realize(yw, c));
        });
        law("reduce_realization_invariant", [&] {
            const auto red = reduce_large_sym(x, g, AssumeRationalPoint{});
            return count_realize(red, c).value() == count_realize(x, c).value();
        });
        law("reduce_idempotent", [&] {
            const auto red = reduce_large_sym(x, g, AssumeRationalPoint{});
            return same(reduce_large_sym(red, g, AssumeRationalPoint{}), red);
        });
        law("text_round_trip", [&] { return parse_terms(to_text(x)) == x.terms(); });
    }
    r.witnesses["laws_checked"] = checked;
    r.witnesses["skipped_empty_windows"] = skipped;
    return r;
}

CheckResult check_parser_round_trip(Grid, std::uint64_t seed, int cases) {
    CheckResult r{"parser_round_trip", true, kTheorem};
    r.params = {{"cases", cases}, {"seed", seed}, {"max_depth", 4}};
    Rng rng(seed);
    for (int i = 0; i < cases; ++i) {
        const Expr e = random_expr(rng, 4);
        const std::string text = render(e);
        try {
            const Expr back = parse(text);
            if (!(back == e) || render(back) != text) fail_with(r, {{"case", i}, {"text", text}, {"rendered_back", render(back)}});
        } catch (const Error& err) {
            fail_with(r, {{"case", i}, {"text", text}, {"error", err.what()}});
        }
    }
    const char* fixtures_src[] = {"Jac * BGm * Z(1)", "Sym(2){-4} + 3*P(1)", "dual(Z(1))", "Jac*BGm", "BGmC"};
    for (const char* s : fixtures_src) {
        const Expr e = parse(s);
        if (!(parse(render(e)) == e)) fail_with(r, {{"fixture", s}});
    }
    return r;
}

std::vector<CheckResult> run_all_checks(Grid grid) {
    const std::vector<std::function<CheckResult()>> all{
        [&] { return check_quot_oracle(grid); },
        [&] { return check_harder_vs_bd(grid); },
        [&] { return check_compact_vs_bd(grid); },
        [&] { return check_convergence_p1(grid); },
        [&] { return check_convergence_fixtures(grid); },
        [&] { return check_duality(grid); },
        [&] { return check_zeta_duality(grid); },
        [&] { return check_hn_key_inequality(grid); },
        [&] { return check_hn_key_inequality_corrected(grid); },
        [&] { return check_hn_codim(grid); },
        [&] { return check_hn_defect(grid); },
        [&] { return check_stabilized_sum(grid); },
        [&] { return check_bun1_consistency(grid); },
        [&] { return check_tate_purity(grid); },
        [&] { return check_fixed_det_relations(grid); },
        [&] { return check_transition_codim(grid); },
        [&] { return check_algebra_properties(grid); },
        [&] { return check_parser_round_trip(grid); },
    };
    std::vector<CheckResult> out;
    for (const auto& f : all) out.push_back(timed(f));
    return out;
}

nlohmann::json verdict(Grid grid, const std::vector<CheckResult>& checks) {
    nlohmann::json list = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        list.push_back(c.to_json());
        passed += c.pass ? 1 : 0;
    }
    return {{"grid", to_string(grid)},
            {"checks", list},
            {"passed", passed},
            {"failed", checks.size() - passed},
            {"all_pass", passed == checks.size()}};
}

} // namespace bunmot
