#include "bunmot/curve.hpp"

#include "bunmot/error.hpp"

#include <algorithm>

namespace bunmot {

namespace {

bool is_prime_power(const Integer& q) {
    if (q < 2) return false;
    Integer p = 2;
    Integer n = q;
    while (p * p <= n) {
        if (n % p == 0) break;
        ++p;
    }
    if (p * p > n) return true;  // n is prime
    while (n % p == 0) n /= p;
    return n == 1;
}

Integer ceil_sqrt(const Integer& q) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    if (r * r < q) ++r;
    return r;
}

} // namespace

ValidatedCurve validate_curve(const CurveData& raw) {
    if (raw.genus < 0) throw Error(ErrorKind::BadCurveData, "genus must be non-negative");
    if (!is_prime_power(raw.q)) throw Error(ErrorKind::BadCurveData, "q = " + raw.q.get_str() + " is not a prime power");
    const auto g = static_cast<std::size_t>(raw.genus);
    const auto& a = raw.zeta_numerator;
    if (a.size() != 2 * g + 1)
        throw Error(ErrorKind::BadLength, "expected " + std::to_string(2 * g + 1) + " coefficients, got " +
                                              std::to_string(a.size()));
    if (a.front() != 1) throw Error(ErrorKind::BadLeadingCoefficient, "need a_0 = 1");
    for (std::size_t i = 0; i <= g; ++i) {
        if (a[2 * g - i] != ipow(raw.q, raw.genus - static_cast<std::int64_t>(i)) * a[i])
            throw Error(ErrorKind::FunctionalEquationViolated,
                        "a_" + std::to_string(2 * g - i) + " != q^" + std::to_string(g - i) + " * a_" + std::to_string(i));
    }
    std::vector<std::string> warnings;
    if (g > 0) {
        Integer bound = 2 * Integer(raw.genus) * ceil_sqrt(raw.q);
        if (abs(a[1]) > bound)
            warnings.push_back("|a_1| = " + Integer(abs(a[1])).get_str() + " exceeds the Hasse-Weil bound " + bound.get_str());
    }
    return ValidatedCurve(raw, std::move(warnings));
}

Integer sym_count(const ValidatedCurve& c, std::int64_t j) {
    if (j < 0) return 0;
    const auto& a = c.zeta_numerator();
    const Integer& q = c.q();
    // [t^m] 1/((1-t)(1-qt)) = 1 + q + ... + q^m
    Integer total = 0;
    const auto top = std::min<std::int64_t>(j, static_cast<std::int64_t>(a.size()) - 1);
    for (std::int64_t k = 0; k <= top; ++k) total += a[k] * ((ipow(q, j - k + 1) - 1) / (q - 1));
    if (total < 0) throw Error(ErrorKind::BadCurveData, "negative symmetric power count at j = " + std::to_string(j));
    return total;
}

std::vector<Integer> sym_counts(const ValidatedCurve& c, std::int64_t upto) {
    std::vector<Integer> out;
    for (std::int64_t j = 0; j <= upto; ++j) out.push_back(sym_count(c, j));
    return out;
}

Integer jac_count(const ValidatedCurve& c) {
    Integer s = 0;
    for (const auto& x : c.zeta_numerator()) s += x;
    if (s <= 0) throw Error(ErrorKind::NonPositiveJacCount, "P(1) = " + s.get_str());
    return s;
}

Rational zeta_value(const ValidatedCurve& c, std::int64_t k) {
    if (k <= 1) throw Error(ErrorKind::PoleAtArgument, "zeta_C(q^-k) has a pole for k = " + std::to_string(k));
    const Rational x = rpow(c.q(), -k);
    Rational p = 0;
    Rational xi = 1;
    for (const auto& a : c.zeta_numerator()) {
        p += Rational(a) * xi;
        xi *= x;
    }
    Rational r = p / ((1 - x) * (1 - rpow(c.q(), 1 - k)));
    r.canonicalize();
    return r;
}

std::int64_t euler_chi(std::int64_t nE, std::int64_t dE, std::int64_t nF, std::int64_t dF, std::int64_t g) {
    return nE * nF * (1 - g) + (nE * dF - nF * dE);
}

std::int64_t coconut_audit(std::int64_t nE, std::int64_t dE, std::int64_t n, std::int64_t dF, std::int64_t degD,
                           std::int64_t g) {
    return coconut_audit(nE, dE, n, dF, degD, g, n);
}

std::int64_t coconut_audit(std::int64_t nE, std::int64_t dE, std::int64_t n, std::int64_t dF, std::int64_t degD,
                           std::int64_t g, std::int64_t nF) {
    const std::int64_t hom_torsion = n * nE * degD;                      // Hom(E, O_D^n)
    const std::int64_t hom_twisted = euler_chi(nE, dE, nF, dF + nF * degD, g);  // Hom(E, F(D)), Ext^1 = 0
    return hom_torsion - hom_twisted + euler_chi(nE, dE, nF, dF, g);
}

} // namespace bunmot
