#pragma once

/**
 * @file bun.hpp
 * @brief Closed formulas for the stack Bun_{n,d} of rank n, degree d bundles.
 *
 * Homological-side classes (conj_motive, fixed_det_motive, sln_motive) live
 * in twist >= 0 and vd >= 0 with both unbounded above, so they are requested
 * on windows bounded above, e.g. twist (-inf, H]. Compact-support classes
 * live in vd, twist bounded above and are requested on windows bounded below,
 * e.g. vd [-T, +inf), which is also what count_realize needs.
 *
 * Nothing here depends on the degree d except convergence_audit.
 */

#include "bunmot/curve.hpp"
#include "bunmot/interval.hpp"
#include "bunmot/laurent.hpp"
#include "bunmot/motclass.hpp"
#include "bunmot/numeric.hpp"
#include "bunmot/quot.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bunmot {

/// (n^2 - 1)(g - 1), the dimension of Bun_{n,d}.
std::int64_t bun_dimension(std::int64_t n, std::int64_t g);

/// q^{(n^2-1)(g-1)} / (q-1) |Jac| prod_{i=2}^n zeta_C(q^{-i}); independent of d.
Rational harder_count(std::int64_t n, const ValidatedCurve& c);

/// The same product expanded factor by factor as a series in q^{-1}, through order T.
LaurentQ harder_series(std::int64_t n, const ValidatedCurve& c, std::int64_t T);

/// L^{s} [BG_m] Jac prod_{i=2}^n Z(C, L^{-i}) by direct enumeration of its terms.
MotClass bd_class(std::int64_t n, int genus, const Region& window);

/// Jac . BG_m . prod_{i=1}^{n-1} Z(C, {i}).
MotClass conj_motive(std::int64_t n, int genus, const Region& window);

/// BG_m^c {s} . Jac . prod_{i=2}^n Z(C, {-i}).
MotClass compact_motive(std::int64_t n, int genus, const Region& window);

/// BG_m . prod_{i=1}^{n-1} Z(C, {i}).
MotClass fixed_det_motive(std::int64_t n, const Region& window);
/// prod_{i=1}^{n-1} Z(C, {i}).
MotClass sln_motive(std::int64_t n, const Region& window);
/// BG_m^c {s} . prod_{i=2}^n Z(C, {-i}).
MotClass compact_fixed_det_motive(std::int64_t n, int genus, const Region& window);
/// 1{s} . prod_{i=2}^n Z(C, {-i}).
MotClass compact_sln_motive(std::int64_t n, int genus, const Region& window);

/// dual(conj_motive){n^2(g-1)} against compact_motive over `width` vd levels.
IdentityReport duality_check(std::int64_t n, int genus, std::int64_t width);

/// dual(zeta_class(i)) against zeta_class(-(i+1)) over `width` levels.
IdentityReport zeta_dual_check(std::int64_t i, int genus, std::int64_t width);

/// compact_motive against bd_class over `width` vd levels below the top.
IdentityReport compact_vs_bd(std::int64_t n, int genus, std::int64_t width);

struct SeriesReport {
    bool equal = true;
    std::int64_t order = 0;
    std::optional<std::int64_t> first_mismatch;
};

/// harder_series against count_realize(bd_class) coefficient-wise through q^{-T}.
SeriesReport harder_vs_bd(std::int64_t n, const ValidatedCurve& c, std::int64_t T);

struct ConvergenceRow {
    std::int64_t l = 0;
    std::int64_t N = 0;
    std::int64_t rank = 0;
    Integer quot = 0;
    Rational r;
    Rational delta;
    /// Least e with q^{-e} <= delta; empty when delta = 0.
    std::optional<std::int64_t> v;
};

/// r_l = quot_count(n, n l d0 - d) / q^{rank V_l} against harder_count, for l = 1..l_max.
std::vector<ConvergenceRow> convergence_audit(std::int64_t n, std::int64_t d, std::int64_t d0,
                                              const ValidatedCurve& c, std::int64_t l_max);

/// Least integer e with q^{-e} <= x, for x > 0.
std::int64_t leading_exponent(const Rational& x, const Integer& q);

} // namespace bunmot
