#include "bunmot/bun.hpp"
#include "bunmot/error.hpp"
#include "bunmot/io.hpp"

#include <doctest.h>

using namespace bunmot;

namespace {

ValidatedCurve fixture(const std::string& name) { return validate_curve(builtin_curve(name)); }

// P(x) / ((1 - x)(1 - q x)) at x = q^{-k}, straight from the coefficients.
Rational zeta_at(const ValidatedCurve& c, std::int64_t k) {
    const Rational x = rpow(c.q(), -k);
    Rational p = 0, xp = 1;
    for (const auto& a : c.zeta_numerator()) {
        p += Rational(a) * xp;
        xp *= x;
    }
    return p / ((1 - x) * (1 - Rational(c.q()) * x));
}

Rational harder_oracle(std::int64_t n, const ValidatedCurve& c) {
    Rational jac = 0;
    for (const auto& a : c.zeta_numerator()) jac += a;
    Rational r = rpow(c.q(), (n * n - 1) * (c.genus() - 1)) * jac / Rational(c.q() - 1);
    for (std::int64_t i = 2; i <= n; ++i) r *= zeta_at(c, i);
    return r;
}

} // namespace

TEST_CASE("harder_count examples") {
    CHECK(harder_count(1, fixture("ell_f2")) == 3);
    CHECK(harder_count(2, fixture("p1_f2")) == Rational(1, 8) * Rational(8, 3));
    CHECK(harder_count(2, fixture("p1_f2")) == Rational(1, 3));
    CHECK(harder_count(2, fixture("ell_f2")) == 9);
    for (const auto& raw : builtin_curves())
        for (std::int64_t n = 1; n <= 4; ++n) CHECK(harder_count(n, validate_curve(raw)) == harder_oracle(n, validate_curve(raw)));
}

TEST_CASE("bd_class examples") {
    const auto b1 = bd_class(1, 1, Region::vd_window(Interval::at_least(-5)));
    MotClass::TermMap expected;
    for (int j = 1; j <= 6; ++j) expected[Term{Atom::jac(), -j}] = 1;
    CHECK(b1.terms() == expected);

    const Region w = Region::vd_window(Interval::at_least(-12));
    const auto b2 = bd_class(2, 0, w);
    const auto direct = restrict_to(mul(mul(lefschetz(-3), bgm_k0(Region::vd_window(Interval::at_least(-20)))),
                                        mul(jac_class(0), zeta_class(-2, Region::vd_window(Interval::at_least(-20))))),
                                    w);
    CHECK(compare(b2, direct).equal);

    const auto e = fixture("ell_f2");
    Rational prev = 0;
    for (std::int64_t T = 2; T <= 30; T += 4) {
        const auto v = count_realize(bd_class(1, 1, Region::vd_window(Interval::at_least(-T))), e).value();
        CHECK(v > prev);
        CHECK(v < 3);
        prev = v;
    }
    CHECK(3 - prev < Rational(1, 1 << 20));
}

TEST_CASE("conj_motive examples") {
    const Region w = Region::twist_window(Interval::at_most(10));
    CHECK(compare(conj_motive(1, 1, w), mul(jac_class(1), bgm_hom(w))).equal);

    // Jac{0} 1{j} Sym^m{m} with vd = g + j + 2m in [0, 6]
    for (int g = 0; g <= 2; ++g) {
        MotClass::TermMap expected;
        for (int j = 0; g + j <= 6; ++j)
            for (int m = 0; g + j + 2 * m <= 6; ++m) expected[Term{Atom::jac() * Atom::sym(m), j + m}] += 1;
        const auto x = conj_motive(2, g, Region::vd_window({0, 6}));
        CHECK(x.terms() == expected);
    }
    CHECK(conj_motive(2, 0, Region::vd_window({0, 6})).size() == 16);

    for (std::int64_t n = 1; n <= 3; ++n) {
        const auto red = reduce_large_sym(conj_motive(n, 0, Region::twist_window(Interval::at_most(25))), 0, AssumeRationalPoint{});
        CHECK(!red.is_zero());
        for (const auto& [t, c] : red.terms()) {
            CHECK(t.atom.is_unit());
            CHECK(c > 0);
        }
    }
}

TEST_CASE("compact_motive examples") {
    const Region w = Region::vd_window(Interval::at_least(-10));
    CHECK(compare(compact_motive(1, 1, w), mul(jac_class(1), bgm_k0(w))).equal);
    for (std::int64_t n = 1; n <= 4; ++n)
        for (int g = 0; g <= 3; ++g) {
            const auto rep = compact_vs_bd(n, g, 40);
            CHECK(rep.equal);
            CHECK(rep.compared > 0);
        }
    const auto p1 = fixture("p1_f2");
    const auto s = count_realize(compact_motive(2, 0, Region::vd_window(Interval::at_least(-20))), p1);
    CHECK(agree(s, harder_series(2, p1, 20)));
}

TEST_CASE("duality") {
    for (std::int64_t n = 1; n <= 3; ++n)
        for (int g = 0; g <= 2; ++g) {
            const auto rep = duality_check(n, g, 30);
            CHECK(rep.equal);
            CHECK(rep.compared > 0);
        }
    for (std::int64_t i = 1; i <= 6; ++i) CHECK(zeta_dual_check(i, 1, 40).equal);
}

TEST_CASE("harder_vs_bd") {
    CHECK(harder_vs_bd(1, fixture("ell_f2"), 20).equal);
    CHECK(harder_vs_bd(2, fixture("p1_f2"), 25).equal);
    CHECK(harder_vs_bd(3, fixture("genus2_f2"), 25).equal);
    for (const auto& raw : builtin_curves())
        for (std::int64_t n = 1; n <= 3; ++n) CHECK(harder_vs_bd(n, validate_curve(raw), 25).equal);
}

TEST_CASE("harder series converges to the closed form") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        for (std::int64_t n = 1; n <= 3; ++n) {
            const Rational exact = harder_count(n, c);
            const Rational gap20 = abs(exact - harder_series(n, c, 20).value());
            const Rational gap40 = abs(exact - harder_series(n, c, 40).value());
            CHECK(gap40 < gap20);
        }
    }
}

TEST_CASE("fixed determinant and SL_n") {
    const Region hom = Region::twist_window(Interval::at_most(15));
    for (std::int64_t n = 1; n <= 3; ++n) {
        CHECK(compare(conj_motive(n, 1, hom), mul(jac_class(1), fixed_det_motive(n, hom))).equal);
        CHECK(compare(fixed_det_motive(n, hom), mul(bgm_hom(hom), sln_motive(n, hom))).equal);
    }
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        const Region k0 = Region::vd_window(Interval::at_least(-15));
        for (std::int64_t n = 1; n <= 3; ++n) {
            const auto fd = count_realize(compact_fixed_det_motive(n, c.genus(), k0), c);
            const auto sl = count_realize(compact_sln_motive(n, c.genus(), k0), c);
            const auto q_minus_one = LaurentQ::monomial(c.q(), -1, 1) - LaurentQ::monomial(c.q(), 0, 1);
            CHECK(agree(q_minus_one * fd, sl));
        }
    }
}

TEST_CASE("convergence audit on the projective line") {
    const auto p1 = fixture("p1_f2");
    const auto rows = convergence_audit(2, 0, 1, p1, 6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].r == Rational(53, 256));
    CHECK(rows[1].r == Rational(1173, 4096));
    CHECK(rows[2].r == Rational(20821, 65536));
    for (const auto& row : rows) {
        CHECK(row.quot == quot_count_oracle(2, 2 * row.l, p1));
        CHECK(row.delta == abs(row.r - Rational(1, 3)));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].delta < rows[i - 1].delta);
    for (std::size_t i = 2; i < rows.size(); ++i) CHECK(*rows[i].v > *rows[i - 1].v);
    CHECK(*rows[0].v == 3);
    CHECK(*rows[1].v == 5);
}

TEST_CASE("rank one convergence is a geometric tail") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        const auto g = c.genus();
        for (int d : {-1, 0}) {
            for (const auto& row : convergence_audit(1, d, 1, c, 8)) {
                if (row.N < 2 * g - 1) continue;
                const Rational expected = Rational(jac_count(c)) * rpow(c.q(), -(row.N + 1 - g)) / Rational(c.q() - 1);
                CHECK(row.delta == expected);
            }
        }
    }
}

TEST_CASE("convergence is monotone on every fixture") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        for (std::int64_t n = 1; n <= 3; ++n) {
            const auto rows = convergence_audit(n, 0, 1, c, 6);
            for (std::size_t i = 1; i < rows.size(); ++i) {
                CHECK(rows[i].delta < rows[i - 1].delta);
                if (rows[i].l >= 3) CHECK(*rows[i].v > *rows[i - 1].v);
            }
        }
    }
}

TEST_CASE("convergence errors and leading exponent") {
    CHECK_THROWS_AS(convergence_audit(2, 5, 1, fixture("p1_f2"), 3), Error);
    CHECK(leading_exponent(Rational(97, 768), 2) == 3);
    CHECK(leading_exponent(Rational(1, 8), 2) == 3);
    CHECK(leading_exponent(Rational(3), 2) == -1);
    CHECK(leading_exponent(Rational(1), 3) == 0);
}
