#include "bunmot/bun.hpp"
#include "bunmot/dsl.hpp"
#include "bunmot/io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bunmot;
using K = Expr::Kind;

TEST_CASE("parse builds the expected trees") {
    const auto e = parse("Jac * BGm * Z(1)");
    REQUIRE(e.kind == K::Prod);
    REQUIRE(e.children.size() == 3);
    CHECK(e.children[0].kind == K::Jac);
    CHECK(e.children[1].kind == K::BGm);
    CHECK(e.children[2].kind == K::Z);
    CHECK(e.children[2].value == 1);

    const auto s = parse("Sym(2){-4} + 3*P(1)");
    REQUIRE(s.kind == K::Sum);
    REQUIRE(s.children.size() == 2);
    CHECK(s.children[0].kind == K::Twist);
    CHECK(s.children[0].value == -4);
    CHECK(s.children[0].children[0].kind == K::Sym);
    CHECK(s.children[1].kind == K::Prod);
    CHECK(s.children[1].children[0].value == 3);
}

TEST_CASE("precedence and whitespace") {
    CHECK(parse("L + Jac*BGm") == parse("L+(Jac*BGm)"));
    CHECK(parse("  Jac * L{2} ") == parse("Jac*(L{2})"));
    CHECK_FALSE(parse("(Jac*L){2}") == parse("Jac*L{2}"));
    CHECK(parse("Z(-3)").value == -3);
    CHECK(parse("L{1}{2}").kind == K::Twist);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
    try {
        parse("Z()");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.kind() == ErrorKind::SyntaxError);
        CHECK(std::find(e.expected().begin(), e.expected().end(), "integer") != e.expected().end());
    }
    for (const char* bad : {"", "Jac +", "L^{2}", "Sym(-1)", "Foo", "(L", "L{}", "P(1", "dual L"}) CHECK_THROWS_AS(parse(bad), SyntaxError);
    try {
        parse("L^{2}");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("render round trip on fixtures") {
    for (const char* src : {"Jac * BGm * Z(1)", "Sym(2){-4} + 3*P(1)", "dual(Z(1))", "(L + 1){3} * BGmC",
                            "((Jac))", "2 + L + L*L", "Z(-2){-1}{5}", "(L*Jac)*Sym(3)"}) {
        const auto e = parse(src);
        CHECK(parse(render(e)) == e);
        CHECK(render(parse(render(e))) == render(e));
    }
}

TEST_CASE("eval matches library constructors") {
    const Region w = Region::vd_window({0, 10});
    CHECK(compare(eval(parse("Jac*BGm"), 1, w), conj_motive(1, 1, w)).equal);
    CHECK(compare(eval(parse("Jac*BGm"), 1, w), conj_motive(1, 1, w)).compared > 0);

    for (int g = 0; g <= 3; ++g) {
        const Region z = Region::vd_window({-20, 20});
        const auto lhs = eval(parse("dual(Z(1))"), g, z);
        const auto rhs = eval(parse("Z(-2)"), g, z);
        const auto cmp = compare(lhs, rhs);
        CHECK(cmp.equal);
        CHECK(cmp.compared > 0);
    }

    const Region k0 = Region::vd_window(Interval::at_least(-12));
    CHECK(compare(eval(parse("1{-3} * BGmC * Jac * Z(-2)"), 0, k0), bd_class(2, 0, k0)).equal);
    CHECK(compare(eval(parse("BGmC * Jac"), 1, k0), compact_motive(1, 1, k0)).equal);
    CHECK(eval(parse("P(2)"), std::nullopt, Region::all()).terms() == projective_space(2).terms());
}

TEST_CASE("realize") {
    const auto p1 = validate_curve(builtin_curve("p1_f2"));
    const auto s = realize(parse("BGmC"), p1, 5);
    LaurentQ expected(2, 5);
    for (int e = 1; e <= 5; ++e) expected.add_term(e, 1);
    CHECK(agree(s, expected));
    CHECK(s.order() == std::optional<std::int64_t>(5));
    CHECK(realize(parse("P(2)"), p1, 0).value() == 7);
    CHECK(realize(parse("L*L + 3"), p1, 0).value() == 7);
    const auto e = validate_curve(builtin_curve("ell_f2"));
    CHECK(realize(parse("Sym(2)"), e, 0).value() == 9);
}

TEST_CASE("unbound genus") {
    CHECK_THROWS_AS(eval(parse("Jac"), std::nullopt, Region::all()), Error);
    try {
        eval(parse("dual(L)"), std::nullopt, Region::all());
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnboundGenus);
    }
    CHECK_NOTHROW(eval(parse("L{3} + Sym(2)"), std::nullopt, Region::all()));
}
