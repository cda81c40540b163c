#pragma once

/**
 * @file curve.hpp
 * @brief Exact arithmetic of the zeta function of a curve over F_q.
 *
 * A curve enters only through its Weil data: genus g, field size q and the
 * numerator P(t) = a_0 + a_1 t + ... + a_{2g} t^{2g} of
 * Z_C(t) = P(t) / ((1 - t)(1 - q t)). Everything downstream (symmetric power
 * counts, Jacobian counts, special values) is derived from these integers.
 */

#include "bunmot/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bunmot {

struct CurveData {
    std::string name;
    int genus = 0;
    Integer q;
    std::vector<Integer> zeta_numerator;
};

/// CurveData that passed validate_curve; the only way to feed a curve to the formulas.
class ValidatedCurve {
public:
    const std::string& name() const { return data_.name; }
    int genus() const { return data_.genus; }
    const Integer& q() const { return data_.q; }
    const std::vector<Integer>& zeta_numerator() const { return data_.zeta_numerator; }
    const CurveData& data() const { return data_; }
    /// Non-fatal diagnostics raised during validation (Hasse-Weil bound).
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    friend ValidatedCurve validate_curve(const CurveData& raw);
    ValidatedCurve(CurveData d, std::vector<std::string> w) : data_(std::move(d)), warnings_(std::move(w)) {}

    CurveData data_;
    std::vector<std::string> warnings_;
};

/**
 * Checks length 2g+1, a_0 = 1, a_{2g} = q^g and a_{2g-i} = q^{g-i} a_i.
 * A coefficient |a_1| above 2g*ceil(sqrt q) only produces a warning.
 */
ValidatedCurve validate_curve(const CurveData& raw);

/// |C^{(j)}(F_q)|: coefficient of t^j in Z_C(t).
Integer sym_count(const ValidatedCurve& c, std::int64_t j);

/// sym_count for j = 0..upto.
std::vector<Integer> sym_counts(const ValidatedCurve& c, std::int64_t upto);

/// |Jac(C)(F_q)| = P(1).
Integer jac_count(const ValidatedCurve& c);

/// zeta_C(q^{-k}) = P(q^{-k}) / ((1 - q^{-k})(1 - q^{1-k})) for k >= 2.
Rational zeta_value(const ValidatedCurve& c, std::int64_t k);

/// chi(E, F) = nE nF (1 - g) + (nE dF - nF dE) by Riemann-Roch.
std::int64_t euler_chi(std::int64_t nE, std::int64_t dE, std::int64_t nF, std::int64_t dF, std::int64_t g);

/**
 * Residual of dim Hom(E, O_D^n) - dim Hom(E, F(D)) + chi(E, F) for a sheaf F of
 * rank nF (defaulting to n) and degree dF, with both Hom dimensions expressed
 * through Euler characteristics. Zero exactly when nF = n or nE*deg D = 0.
 */
std::int64_t coconut_audit(std::int64_t nE, std::int64_t dE, std::int64_t n, std::int64_t dF,
                           std::int64_t degD, std::int64_t g);
std::int64_t coconut_audit(std::int64_t nE, std::int64_t dE, std::int64_t n, std::int64_t dF,
                           std::int64_t degD, std::int64_t g, std::int64_t nF);

} // namespace bunmot
