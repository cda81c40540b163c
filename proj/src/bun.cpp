#include "bunmot/bun.hpp"

#include "bunmot/error.hpp"
#include "bunmot/hn.hpp"

#include <functional>

namespace bunmot {

namespace {

void check_rank(std::int64_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
}

std::vector<Factor> negative_zetas(std::int64_t n) {
    std::vector<Factor> fs;
    for (std::int64_t i = 2; i <= n; ++i) fs.push_back(Factor::zeta(-i));
    return fs;
}

std::vector<Factor> positive_zetas(std::int64_t n) {
    std::vector<Factor> fs;
    for (std::int64_t i = 1; i < n; ++i) fs.push_back(Factor::zeta(i));
    return fs;
}

IdentityReport report(const Comparison& c) { return {c.equal, c.compared, c.first_mismatch}; }

} // namespace

std::int64_t bun_dimension(std::int64_t n, std::int64_t g) { return (n * n - 1) * (g - 1); }

Rational harder_count(std::int64_t n, const ValidatedCurve& c) {
    check_rank(n);
    Rational r = rpow(c.q(), bun_dimension(n, c.genus()));
    r *= Rational(jac_count(c), c.q() - 1);
    for (std::int64_t i = 2; i <= n; ++i) r *= zeta_value(c, i);
    r.canonicalize();
    return r;
}

LaurentQ harder_series(std::int64_t n, const ValidatedCurve& c, std::int64_t T) {
    check_rank(n);
    if (T < 1) throw Error(ErrorKind::InvalidArgument, "need T >= 1");
    const std::int64_t s = bun_dimension(n, c.genus());
    // Every factor below has valuation >= -s overall, so this order is enough.
    const std::int64_t work = T + (s > 0 ? s : -s) + 1;
    LaurentQ acc = LaurentQ::monomial(c.q(), -s, Rational(jac_count(c)));
    acc = acc * LaurentQ::inverse_q_minus_one(c.q(), work);
    for (std::int64_t i = 2; i <= n; ++i) {
        LaurentQ z(c.q(), work);
        for (std::int64_t j = 0; i * j <= work; ++j) z.add_term(i * j, Rational(sym_count(c, j)));
        acc = acc * z;
    }
    return acc.truncated(T);
}

MotClass bd_class(std::int64_t n, int genus, const Region& window) {
    check_rank(n);
    const std::int64_t s = bun_dimension(n, genus);
    // A term Jac . prod Sym^{j_i} {s - b - sum i j_i} has
    //   vd    = g + s - b - sum (i-1) j_i,   twist = s - b - sum i j_i.
    const std::optional<std::int64_t> kv =
        window.vd.lo.finite() ? std::optional(genus + s - window.vd.lo.value()) : std::nullopt;
    const std::optional<std::int64_t> kt =
        window.twist.lo.finite() ? std::optional(s - window.twist.lo.value()) : std::nullopt;
    if (!kv && !kt) throw Error(ErrorKind::UnboundedWindow, "bd_class on " + window.str());

    MotClass::TermMap terms;
    std::vector<std::int64_t> j(static_cast<std::size_t>(n > 1 ? n - 1 : 0), 0);
    auto room = [&](std::int64_t used_v, std::int64_t used_t) {
        std::int64_t r = INT64_MAX;
        if (kv) r = std::min(r, *kv - used_v);
        if (kt) r = std::min(r, *kt - used_t);
        return r;
    };
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t k, std::int64_t used_v,
                                                                           std::int64_t used_t) {
        if (k == j.size()) {
            Atom atom = Atom::jac();
            for (auto part : j) atom = atom * Atom::sym(static_cast<int>(part));
            for (std::int64_t b = 1; b <= room(used_v, used_t); ++b) terms[Term{atom, s - b - used_t}] += 1;
            return;
        }
        const auto i = static_cast<std::int64_t>(k) + 2;
        for (std::int64_t v = 0; room(used_v + (i - 1) * v, used_t + i * v) >= 1; ++v) {
            j[k] = v;
            rec(k + 1, used_v + (i - 1) * v, used_t + i * v);
        }
        j[k] = 0;
    };
    rec(0, 0, 0);
    const Region support{Interval::at_most(genus + s - 1), Interval::at_most(s - 1)};
    return MotClass::truncated(std::move(terms), window, support, genus);
}

MotClass conj_motive(std::int64_t n, int genus, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::of(jac_class(genus)), Factor::bgm_hom()};
    for (auto& f : positive_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

MotClass compact_motive(std::int64_t n, int genus, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::of(twist(jac_class(genus), bun_dimension(n, genus))), Factor::bgm_k0()};
    for (auto& f : negative_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

MotClass fixed_det_motive(std::int64_t n, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::bgm_hom()};
    for (auto& f : positive_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

MotClass sln_motive(std::int64_t n, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::of(unit_class())};
    for (auto& f : positive_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

MotClass compact_fixed_det_motive(std::int64_t n, int genus, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::of(lefschetz(bun_dimension(n, genus))), Factor::bgm_k0()};
    for (auto& f : negative_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

MotClass compact_sln_motive(std::int64_t n, int genus, const Region& window) {
    check_rank(n);
    std::vector<Factor> fs{Factor::of(lefschetz(bun_dimension(n, genus)))};
    for (auto& f : negative_zetas(n)) fs.push_back(std::move(f));
    return product_in_region(fs, window);
}

IdentityReport duality_check(std::int64_t n, int genus, std::int64_t width) {
    const std::int64_t shift = n * n * (genus - 1);
    const MotClass lhs =
        twist(dual(conj_motive(n, genus, Region::twist_window(Interval::at_most(width))), genus), shift);
    const MotClass rhs = compact_motive(n, genus, Region::vd_window(Interval::at_least(shift - width)));
    auto cmp = compare(lhs, rhs);
    if (cmp.compared == 0) cmp.equal = false;
    return report(cmp);
}

IdentityReport zeta_dual_check(std::int64_t i, int genus, std::int64_t width) {
    const MotClass lhs = dual(zeta_class(i, Region::twist_window(Interval::at_most(width))), genus);
    const MotClass rhs = zeta_class(-(i + 1), Region::vd_window(Interval::at_least(-width)));
    auto cmp = compare(lhs, rhs);
    if (cmp.compared == 0) cmp.equal = false;
    return report(cmp);
}

IdentityReport compact_vs_bd(std::int64_t n, int genus, std::int64_t width) {
    const std::int64_t top = genus + bun_dimension(n, genus) - 1;
    const Region window = Region::vd_window(Interval::at_least(top - width + 1));
    auto cmp = compare(compact_motive(n, genus, window), bd_class(n, genus, window));
    if (cmp.compared == 0) cmp.equal = false;
    return report(cmp);
}

SeriesReport harder_vs_bd(std::int64_t n, const ValidatedCurve& c, std::int64_t T) {
    const LaurentQ closed = harder_series(n, c, T);
    const LaurentQ realized = count_realize(bd_class(n, c.genus(), Region::vd_window(Interval::at_least(-T))), c);
    SeriesReport out;
    out.order = T;
    if (!realized.order() || *realized.order() < T)
        throw Error(ErrorKind::InvalidArgument, "realized Behrend-Dhillon series is too short");
    std::int64_t lo = T;
    if (auto v = closed.valuation()) lo = std::min(lo, *v);
    if (auto v = realized.valuation()) lo = std::min(lo, *v);
    for (std::int64_t e = lo; e <= T; ++e) {
        if (closed.coefficient(e) != realized.coefficient(e)) {
            out.equal = false;
            out.first_mismatch = e;
            break;
        }
    }
    return out;
}

std::int64_t leading_exponent(const Rational& x, const Integer& q) {
    if (x <= 0) throw Error(ErrorKind::InvalidArgument, "leading exponent of a non-positive number");
    std::int64_t e = 0;
    Rational scaled = x;  // x q^e
    while (scaled >= 1) {
        scaled /= q;
        --e;
    }
    while (scaled < 1) {
        scaled *= q;
        ++e;
    }
    return e;
}

std::vector<ConvergenceRow> convergence_audit(std::int64_t n, std::int64_t d, std::int64_t d0,
                                              const ValidatedCurve& c, std::int64_t l_max) {
    check_rank(n);
    if (d0 < 1) throw Error(ErrorKind::InvalidArgument, "need d0 >= 1");
    const Rational limit = harder_count(n, c);
    std::vector<ConvergenceRow> rows;
    for (std::int64_t l = 1; l <= l_max; ++l) {
        ConvergenceRow row;
        row.l = l;
        row.N = n * l * d0 - d;
        if (row.N < 0) throw Error(ErrorKind::NegativeN, "N = " + std::to_string(row.N) + " at l = " + std::to_string(l));
        row.rank = rank_Vl(n, d, c.genus(), l, d0);
        row.quot = quot_count(n, row.N, c);
        row.r = Rational(row.quot) / rpow(c.q(), row.rank);
        row.r.canonicalize();
        row.delta = abs(row.r - limit);
        if (row.delta != 0) row.v = leading_exponent(row.delta, c.q());
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace bunmot
