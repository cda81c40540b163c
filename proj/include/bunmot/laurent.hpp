#pragma once

#include "bunmot/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace bunmot {

/**
 * Truncated Laurent series sum_e c_e q^{-e} in the symbol q^{-1}, with exact
 * rational coefficients and a fixed numeric q used only by value().
 *
 * Coefficients with e > order() are unknown, not zero. An empty order means
 * the series is exact (finitely many terms, nothing truncated).
 */
class LaurentQ {
public:
    using Order = std::optional<std::int64_t>;

    explicit LaurentQ(Integer q, Order order = std::nullopt);

    static LaurentQ monomial(const Integer& q, std::int64_t e, const Rational& c, Order order = std::nullopt);
    /// 1/(q-1) = q^{-1} + q^{-2} + ... through q^{-order}.
    static LaurentQ inverse_q_minus_one(const Integer& q, std::int64_t order);

    const Integer& q() const { return q_; }
    const Order& order() const { return order_; }
    const std::map<std::int64_t, Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of q^{-e}; asserts e is within the known range.
    Rational coefficient(std::int64_t e) const;
    void add_term(std::int64_t e, const Rational& c);

    /// Drops everything beyond e > order (and tightens the order).
    LaurentQ truncated(std::int64_t order) const;
    /// Exact rational sum of the known terms.
    Rational value() const;
    /// Lowest exponent that may carry a nonzero coefficient.
    std::optional<std::int64_t> valuation() const;

    friend LaurentQ operator+(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator-(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
    friend LaurentQ operator*(const Rational& s, const LaurentQ& a);


private:
    void prune();

    Integer q_;
    Order order_;
    std::map<std::int64_t, Rational> coeffs_;
};

/// Coefficient-wise equality through min(order(a), order(b), limit).
bool agree(const LaurentQ& a, const LaurentQ& b, std::optional<std::int64_t> limit = std::nullopt);

} // namespace bunmot
