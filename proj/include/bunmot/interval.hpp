#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace bunmot {

/**
 * An integer extended by -inf and +inf.
 *
 * Window and support bounds are either finite integers or unbounded.
 * Adding opposite infinities is a logic error and asserts.
 */
class Ext {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    constexpr Ext() = default;
    constexpr Ext(std::int64_t v) : kind_(Kind::Finite), value_(v) {}  // NOLINT: implicit by design of the grading API

    static constexpr Ext neg_inf() { return Ext(Kind::NegInf); }
    static constexpr Ext pos_inf() { return Ext(Kind::PosInf); }

    constexpr bool finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    constexpr Kind kind() const { return kind_; }
    std::int64_t value() const;

    friend Ext operator+(Ext a, Ext b);
    friend Ext operator-(Ext a);
    friend Ext operator-(Ext a, Ext b) { return a + (-b); }
    friend std::strong_ordering operator<=>(Ext a, Ext b);
    friend bool operator==(Ext a, Ext b) { return (a <=> b) == 0; }

    std::string str() const;

private:
    constexpr explicit Ext(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Finite;
    std::int64_t value_ = 0;
};

Ext max(Ext a, Ext b);
Ext min(Ext a, Ext b);

/// Closed integer interval [lo, hi] with possibly infinite ends; empty when lo > hi.
struct Interval {
    Ext lo = Ext::neg_inf();
    Ext hi = Ext::pos_inf();

    static Interval all() { return {}; }
    static Interval empty() { return {Ext::pos_inf(), Ext::neg_inf()}; }
    static Interval point(std::int64_t v) { return {v, v}; }
    static Interval at_most(std::int64_t v) { return {Ext::neg_inf(), v}; }
    static Interval at_least(std::int64_t v) { return {v, Ext::pos_inf()}; }

    bool is_empty() const { return lo > hi; }
    bool is_bounded() const { return lo.finite() && hi.finite(); }
    bool contains(std::int64_t v) const { return !is_empty() && lo <= Ext(v) && Ext(v) <= hi; }
    bool contains(const Interval& other) const;

    Interval intersect(const Interval& other) const;
    Interval hull(const Interval& other) const;
    Interval shifted(std::int64_t k) const;
    Interval negated() const;
    /// Minkowski sum; empty if either operand is empty.
    Interval plus(const Interval& other) const;

    bool operator==(const Interval& other) const;
    std::string str() const;
};

/// A two-graded region: virtual dimension and Tate twist.
struct Region {
    Interval vd;
    Interval twist;

    static Region all() { return {}; }
    static Region vd_window(Interval v) { return {v, Interval::all()}; }
    static Region twist_window(Interval t) { return {Interval::all(), t}; }

    bool is_empty() const { return vd.is_empty() || twist.is_empty(); }
    bool contains(std::int64_t v, std::int64_t t) const { return vd.contains(v) && twist.contains(t); }
    bool contains(const Region& r) const { return vd.contains(r.vd) && twist.contains(r.twist); }
    Region intersect(const Region& r) const { return {vd.intersect(r.vd), twist.intersect(r.twist)}; }
    Region hull(const Region& r) const { return {vd.hull(r.vd), twist.hull(r.twist)}; }
    Region shifted(std::int64_t k) const { return {vd.shifted(k), twist.shifted(k)}; }
    Region plus(const Region& r) const { return {vd.plus(r.vd), twist.plus(r.twist)}; }

    bool operator==(const Region&) const = default;
    std::string str() const;
};

} // namespace bunmot
