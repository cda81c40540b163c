#include "bunmot/laurent.hpp"

#include "bunmot/error.hpp"

#include <algorithm>
#include <cassert>

namespace bunmot {

namespace {

LaurentQ::Order min_order(const LaurentQ::Order& a, const LaurentQ::Order& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

void require_same_q(const LaurentQ& a, const LaurentQ& b) {
    if (a.q() != b.q()) throw Error(ErrorKind::InvalidArgument, "Laurent series over different q");
}

} // namespace

LaurentQ::LaurentQ(Integer q, Order order) : q_(std::move(q)), order_(order) {}

LaurentQ LaurentQ::monomial(const Integer& q, std::int64_t e, const Rational& c, Order order) {
    LaurentQ r(q, order);
    r.add_term(e, c);
    return r;
}

LaurentQ LaurentQ::inverse_q_minus_one(const Integer& q, std::int64_t order) {
    LaurentQ r(q, order);
    for (std::int64_t e = 1; e <= order; ++e) r.add_term(e, 1);
    return r;
}

Rational LaurentQ::coefficient(std::int64_t e) const {
    assert(!order_ || e <= *order_);
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentQ::add_term(std::int64_t e, const Rational& c) {
    if (order_ && e > *order_) return;
    auto& slot = coeffs_[e];
    slot += c;
    if (slot == 0) coeffs_.erase(e);
}

void LaurentQ::prune() {
    if (!order_) return;
    coeffs_.erase(coeffs_.upper_bound(*order_), coeffs_.end());
}

LaurentQ LaurentQ::truncated(std::int64_t order) const {
    LaurentQ r = *this;
    r.order_ = min_order(order_, order);
    r.prune();
    return r;
}

Rational LaurentQ::value() const {
    Rational s = 0;
    for (const auto& [e, c] : coeffs_) s += c * rpow(q_, -e);
    s.canonicalize();
    return s;
}

std::optional<std::int64_t> LaurentQ::valuation() const {
    if (!coeffs_.empty()) return coeffs_.begin()->first;
    if (order_) return *order_ + 1;
    return std::nullopt;  // exact zero
}

LaurentQ operator+(const LaurentQ& a, const LaurentQ& b) {
    require_same_q(a, b);
    LaurentQ r(a.q_, min_order(a.order_, b.order_));
    for (const auto& [e, c] : a.coeffs_) r.add_term(e, c);
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

LaurentQ operator-(const LaurentQ& a, const LaurentQ& b) { return a + Rational(-1) * b; }

LaurentQ operator*(const Rational& s, const LaurentQ& a) {
    LaurentQ r(a.q_, a.order_);
    if (s == 0) return r;
    for (const auto& [e, c] : a.coeffs_) r.add_term(e, s * c);
    return r;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
    require_same_q(a, b);
    const auto va = a.valuation();
    const auto vb = b.valuation();
    // An exact zero factor makes the product exactly zero.
    if (!va && a.coeffs_.empty()) return LaurentQ(a.q_);
    if (!vb && b.coeffs_.empty()) return LaurentQ(a.q_);
    LaurentQ::Order order;
    if (a.order_) order = *a.order_ + *vb;
    if (b.order_) order = min_order(order, *b.order_ + *va);
    LaurentQ r(a.q_, order);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            if (order && ea + eb > *order) break;
            r.add_term(ea + eb, ca * cb);
        }
    }
    return r;
}

bool agree(const LaurentQ& a, const LaurentQ& b, std::optional<std::int64_t> limit) {
    if (a.q() != b.q()) return false;
    const auto order = min_order(min_order(a.order(), b.order()), limit);
    auto clip = [&](const std::map<std::int64_t, Rational>& m) {
        std::map<std::int64_t, Rational> out;
        for (const auto& [e, c] : m)
            if (!order || e <= *order) out.emplace(e, c);
        return out;
    };
    return clip(a.coefficients()) == clip(b.coefficients());
}

} // namespace bunmot
