#include "bunmot/interval.hpp"

#include <cassert>

namespace bunmot {

std::int64_t Ext::value() const {
    assert(finite());
    return value_;
}

Ext operator+(Ext a, Ext b) {
    if (a.finite() && b.finite()) return Ext(a.value_ + b.value_);
    assert(!(a.is_neg_inf() && b.is_pos_inf()) && !(a.is_pos_inf() && b.is_neg_inf()));
    if (a.is_neg_inf() || b.is_neg_inf()) return Ext::neg_inf();
    return Ext::pos_inf();
}

Ext operator-(Ext a) {
    if (a.is_neg_inf()) return Ext::pos_inf();
    if (a.is_pos_inf()) return Ext::neg_inf();
    return Ext(-a.value_);
}

std::strong_ordering operator<=>(Ext a, Ext b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (a.finite()) return a.value_ <=> b.value_;
    return std::strong_ordering::equal;
}

std::string Ext::str() const {
    if (is_neg_inf()) return "-inf";
    if (is_pos_inf()) return "+inf";
    return std::to_string(value_);
}

Ext max(Ext a, Ext b) { return a < b ? b : a; }
Ext min(Ext a, Ext b) { return a < b ? a : b; }

bool Interval::contains(const Interval& other) const {
    if (other.is_empty()) return true;
    if (is_empty()) return false;
    return lo <= other.lo && other.hi <= hi;
}

Interval Interval::intersect(const Interval& other) const {
    Interval r{max(lo, other.lo), min(hi, other.hi)};
    return r.is_empty() ? empty() : r;
}

Interval Interval::hull(const Interval& other) const {
    if (is_empty()) return other;
    if (other.is_empty()) return *this;
    return {min(lo, other.lo), max(hi, other.hi)};
}

Interval Interval::shifted(std::int64_t k) const {
    if (is_empty()) return empty();
    return {lo + Ext(k), hi + Ext(k)};
}

Interval Interval::negated() const {
    if (is_empty()) return empty();
    return {-hi, -lo};
}

Interval Interval::plus(const Interval& other) const {
    if (is_empty() || other.is_empty()) return empty();
    return {lo + other.lo, hi + other.hi};
}

bool Interval::operator==(const Interval& other) const {
    if (is_empty() || other.is_empty()) return is_empty() == other.is_empty();
    return lo == other.lo && hi == other.hi;
}

std::string Interval::str() const {
    if (is_empty()) return "[]";
    return std::string(lo.finite() ? "[" : "(") + lo.str() + ", " + hi.str() + (hi.finite() ? "]" : ")");
}

std::string Region::str() const { return "vd " + vd.str() + " twist " + twist.str(); }

} // namespace bunmot
