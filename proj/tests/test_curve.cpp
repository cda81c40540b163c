#include "bunmot/curve.hpp"
#include "bunmot/error.hpp"
#include "bunmot/io.hpp"

#include <doctest.h>

using namespace bunmot;

namespace {

ValidatedCurve curve(int g, int q, std::vector<int> p) {
    CurveData d{"t", g, q, {}};
    for (int a : p) d.zeta_numerator.emplace_back(a);
    return validate_curve(d);
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

// Naive series P(t) / ((1 - t)(1 - q t)) through t^T by repeated division.
std::vector<Integer> naive_zeta_series(const ValidatedCurve& c, std::size_t T) {
    std::vector<Integer> s(T + 1, 0);
    for (std::size_t i = 0; i < c.zeta_numerator().size() && i <= T; ++i) s[i] = c.zeta_numerator()[i];
    for (const Integer r : {Integer(1), c.q()}) {
        std::vector<Integer> out(T + 1, 0);
        for (std::size_t k = 0; k <= T; ++k)
            for (std::size_t i = 0; i <= k; ++i) {
                Integer p = 1;
                for (std::size_t e = 0; e < k - i; ++e) p *= r;
                out[k] += s[i] * p;
            }
        s = out;
    }
    return s;
}

} // namespace

TEST_CASE("validate_curve examples") {
    CHECK_NOTHROW(curve(0, 2, {1}));
    CHECK_NOTHROW(curve(1, 2, {1, 0, 2}));
    CHECK(kind_of([] { curve(1, 2, {1, 0, 3}); }) == ErrorKind::FunctionalEquationViolated);
}

TEST_CASE("validate_curve rejections and warnings") {
    CHECK(kind_of([] { curve(1, 2, {1, 0}); }) == ErrorKind::BadLength);
    CHECK(kind_of([] { curve(1, 2, {2, 0, 4}); }) == ErrorKind::BadLeadingCoefficient);
    CHECK(kind_of([] { curve(2, 2, {1, 1, 2, 3, 4}); }) == ErrorKind::FunctionalEquationViolated);
    CHECK(kind_of([] { curve(0, 6, {1}); }) == ErrorKind::BadCurveData);
    CHECK(curve(1, 2, {1, 0, 2}).warnings().empty());
    // |a_1| = 5 > 2 g ceil(sqrt 2) = 4
    CHECK(curve(1, 2, {1, 5, 2}).warnings().size() == 1);
}

TEST_CASE("sym_count examples") {
    const auto p1 = curve(0, 2, {1});
    CHECK(sym_count(p1, 2) == 7);  // |P^2(F_2)| = 4 + 2 + 1
    const auto e = curve(1, 2, {1, 0, 2});
    // (1 + 2t^2) sum (2^{k+1} - 1) t^k at t^2: 7 + 2 * 1
    CHECK(sym_count(e, 2) == Integer(7) + 2 * 1);
    for (const auto& c : builtin_curves()) CHECK(sym_count(validate_curve(c), 0) == 1);
}

TEST_CASE("sym_count agrees with the series expansion through t^64") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        const auto expected = naive_zeta_series(c, 64);
        const auto got = sym_counts(c, 64);
        REQUIRE(got.size() == expected.size());
        for (std::size_t j = 0; j <= 64; ++j) CHECK(got[j] == expected[j]);
    }
}

TEST_CASE("sym_count is a projective bundle count above 2g - 2") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        const auto g = c.genus();
        for (std::int64_t j = std::max(0, 2 * g - 1); j <= 30; ++j) {
            const Integer expected = jac_count(c) * (ipow(c.q(), j - g + 1) - 1) / (c.q() - 1);
            CHECK(sym_count(c, j) == expected);
        }
    }
}

TEST_CASE("jac_count examples") {
    CHECK(jac_count(curve(0, 2, {1})) == 1);
    CHECK(jac_count(curve(1, 2, {1, 0, 2})) == 1 + 0 + 2);
    CHECK(jac_count(curve(1, 3, {1, 1, 3})) == 1 + 1 + 3);
    // Passes the functional equation but P(1) = 1 - 4 + 2 < 0.
    CHECK(kind_of([] { jac_count(curve(1, 2, {1, -4, 2})); }) == ErrorKind::NonPositiveJacCount);
}

TEST_CASE("zeta_value examples") {
    const auto p1 = curve(0, 2, {1});
    CHECK(zeta_value(p1, 2) == 1 / (Rational(3, 4) * Rational(1, 2)));
    CHECK(zeta_value(p1, 2) == Rational(8, 3));
    const auto e = curve(1, 2, {1, 0, 2});
    CHECK(zeta_value(e, 2) == Rational(9, 8) / Rational(3, 8));
    CHECK(kind_of([&] { zeta_value(e, 1); }) == ErrorKind::PoleAtArgument);
    CHECK(kind_of([&] { zeta_value(e, 0); }) == ErrorKind::PoleAtArgument);
}

TEST_CASE("zeta_value partial sums stay within the geometric tail bound") {
    for (const auto& raw : builtin_curves()) {
        const auto c = validate_curve(raw);
        const auto g = c.genus();
        for (std::int64_t k = 2; k <= 4; ++k) {
            const Rational z = zeta_value(c, k);
            Rational partial = 0;
            for (std::int64_t T = 0; T <= 30; ++T) {
                partial += Rational(sym_count(c, T)) * rpow(c.q(), -k * T);
                const Rational tail = z - partial;
                CHECK(tail > 0);
                if (T >= 2 * g - 2) {
                    const Rational bound = Rational(jac_count(c)) * rpow(c.q(), 1 - g) * rpow(c.q(), (1 - k) * (T + 1)) /
                                           (Rational(c.q() - 1) * (1 - rpow(c.q(), 1 - k)));
                    CHECK(tail <= bound);
                }
            }
        }
    }
}

TEST_CASE("euler_chi examples and structure") {
    CHECK(euler_chi(1, 0, 1, 0, 0) == 1);
    CHECK(euler_chi(1, 0, 1, 0, 1) == 0);
    CHECK(euler_chi(2, 1, 3, -2, 2) == 6 * (-1) + (2 * (-2) - 3 * 1));
    // additive in each (rank, degree) argument
    for (int g = 0; g <= 3; ++g)
        for (int a = 1; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b) {
                CHECK(euler_chi(a + 1, b + 2, 2, 1, g) == euler_chi(a, b, 2, 1, g) + euler_chi(1, 2, 2, 1, g));
                CHECK(euler_chi(2, 1, a + 1, b + 2, g) == euler_chi(2, 1, a, b, g) + euler_chi(2, 1, 1, 2, g));
                // the degree cross term changes sign when the pairs swap
                const auto cross = euler_chi(a, b, 2, 1, g) - a * 2 * (1 - g);
                const auto swapped = euler_chi(2, 1, a, b, g) - a * 2 * (1 - g);
                CHECK(cross == -swapped);
            }
}

TEST_CASE("coconut_audit residual") {
    CHECK(coconut_audit(2, 0, 2, 0, 3, 1) == 0);
    CHECK(coconut_audit(1, 5, 1, -5, 1, 0) == 0);
    CHECK(coconut_audit(1, 0, 2, 0, 2, 0, 1) == 2);
    for (int nE = 1; nE <= 3; ++nE)
        for (int nF = 1; nF <= 3; ++nF)
            for (int degD = 0; degD <= 3; ++degD)
                CHECK(coconut_audit(nE, 1, 3, -1, degD, 2, nF) == nE * degD * (3 - nF));
}
