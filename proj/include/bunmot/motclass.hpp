#pragma once

/**
 * @file motclass.hpp
 * @brief Finite formal classes in atoms Jac^a * Sym^{j_1} * ... * Sym^{j_r} with Tate twists.
 *
 * A MotClass stands for a possibly infinite sum of terms A{k}. It stores only
 * the terms inside its completeness window and promises nothing outside it.
 *
 * Every term has two gradings: its virtual dimension vd = dim(A) + k and its
 * twist k. A window is a Region (an interval in each grading); the class is
 * exact on every term whose vd and twist both lie in the window. Alongside
 * the window each class carries a support Region that bounds where the full
 * (untruncated) object can have terms at all. Window arithmetic only ever
 * uses these two pieces of data:
 *
 *  - add:   window = intersection, support = hull.
 *  - mul:   per grading, with normalised windows W and supports S,
 *           lo = max(lo_x + hi(S_y), lo_y + hi(S_x)) over the finite lo's,
 *           hi = min(hi_x + lo(S_y), hi_y + lo(S_x)) over the finite hi's;
 *           support = Minkowski sum.
 *  - twist: both gradings shift by k.
 *  - dual:  (vd, twist) -> (-twist, -vd) for windows and supports alike,
 *           since (A{k})^dual = A{-dim A - k} has vd -k and twist -vd.
 *
 * A window is normalised by widening an end to infinity whenever it already
 * reaches past the support on that side.
 */

#include "bunmot/interval.hpp"
#include "bunmot/numeric.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bunmot {

class ValidatedCurve;
class LaurentQ;

/// Jac^a * prod Sym^{j_t}; Sym^0 is the unit and never stored.
struct Atom {
    int jac_exp = 0;
    std::vector<int> sym_parts;  // ascending, all >= 1

    static Atom unit() { return {}; }
    static Atom jac(int a = 1) { return Atom{a, {}}; }
    static Atom sym(int j);

    bool is_unit() const { return jac_exp == 0 && sym_parts.empty(); }
    std::int64_t dimension(int genus) const;
    Atom operator*(const Atom& other) const;

    auto operator<=>(const Atom&) const = default;
};

struct Term {
    Atom atom;
    std::int64_t twist = 0;

    auto operator<=>(const Term&) const = default;
};

class MotClass {
public:
    using TermMap = std::map<Term, Integer>;

    /// The exact zero class.
    MotClass() = default;

    /// A finite class known in full.
    static MotClass exact(TermMap terms, std::optional<int> genus = std::nullopt);

    /**
     * A class known only inside `window`. `support` bounds the full object;
     * leave it unbounded when nothing is known. Terms outside the window are
     * discarded, terms outside the support are rejected.
     */
    static MotClass truncated(TermMap terms, Region window, Region support = Region::all(),
                              std::optional<int> genus = std::nullopt);

    const TermMap& terms() const { return terms_; }
    const Region& window() const { return window_; }
    const Region& support() const { return support_; }
    const std::optional<int>& genus() const { return genus_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return window_ == Region::all(); }
    std::size_t size() const { return terms_.size(); }
    Integer coefficient(const Term& t) const;

    /// Virtual dimension of a term under this class's genus binding.
    std::int64_t vd(const Term& t) const;

private:
    void normalize();

    TermMap terms_;
    Region window_ = Region::all();
    Region support_ = {Interval::empty(), Interval::empty()};
    std::optional<int> genus_;
};

std::optional<int> unify_genus(const std::optional<int>& a, const std::optional<int>& b);

MotClass add(const MotClass& x, const MotClass& y);
MotClass sub(const MotClass& x, const MotClass& y);
MotClass scale(const MotClass& x, const Integer& s);
MotClass mul(const MotClass& x, const MotClass& y);
MotClass twist(const MotClass& x, std::int64_t k);
MotClass dual(const MotClass& x, int genus);
/// Shrinks the window to window() ∩ region.
MotClass restrict_to(const MotClass& x, const Region& region);

inline MotClass operator+(const MotClass& x, const MotClass& y) { return add(x, y); }
inline MotClass operator-(const MotClass& x, const MotClass& y) { return sub(x, y); }
inline MotClass operator*(const MotClass& x, const MotClass& y) { return mul(x, y); }

/// Tag acknowledging that C has a rational point, so Abel-Jacobi maps are projective bundles.
struct AssumeRationalPoint {};

/**
 * Rewrites Sym^j -> Jac * (1{0} + ... + 1{j-g}) for j >= max(1, 2g-1); in genus
 * zero Jac is the point. New terms have vd <= and twist >= the old ones, so
 * the result is known on [lo(vd), +inf) x (-inf, hi(twist)] provided the input
 * window is unbounded above in vd and below in twist; otherwise EmptyWindow.
 */
MotClass reduce_large_sym(const MotClass& x, int genus, AssumeRationalPoint);

/**
 * Point-count realization: A{k} -> count(A) q^k, grouped by k as the
 * coefficient of q^{-e}, e = -k. Known through order min(-lo(vd), -lo(twist)),
 * which needs a window unbounded above in both gradings.
 */
LaurentQ count_realize(const MotClass& x, const ValidatedCurve& c);

/// Exact count of an atom: |Jac|^a prod |C^{(j)}|.
Integer atom_count(const Atom& a, const ValidatedCurve& c);

struct Comparison {
    bool equal = true;
    std::size_t compared = 0;  ///< distinct terms inside the common window
    Region common;
    std::optional<Term> first_mismatch;
};

/// Term-wise comparison restricted to the intersection of both windows.
Comparison compare(const MotClass& x, const MotClass& y);

/// Canonical text: terms by (vd, twist, atom), e.g. "3·Jac·Sym^2{−4}".
std::string to_text(const MotClass& x);
std::string to_text(const Atom& a);
/// Inverse of to_text on the term data.
MotClass::TermMap parse_terms(const std::string& text);

// ---- constructors -------------------------------------------------------

MotClass unit_class();
/// L^k = 1{k}.
MotClass lefschetz(std::int64_t k = 1);
MotClass jac_class(int genus);
MotClass sym_class(int j);
/// P^n = 1{0} + ... + 1{n}.
MotClass projective_space(std::int64_t n);

/// sum_j Sym^j{i j}; i = -1 is rejected.
MotClass zeta_class(std::int64_t i, const Region& window);
Region zeta_support(std::int64_t i);
/// sum_{j>=0} 1{j}.
MotClass bgm_hom(const Region& window);
Region bgm_hom_support();
/// sum_{j>=1} 1{-j}, the expansion of 1/(L-1).
MotClass bgm_k0(const Region& window);
Region bgm_k0_support();

/// One factor of a windowed product: its support and how to build it for a requested region.
struct Factor {
    Region support;
    std::function<MotClass(const Region&)> build;

    static Factor of(const MotClass& exact_class);
    static Factor zeta(std::int64_t i);
    static Factor bgm_hom();
    static Factor bgm_k0();
};

/**
 * Product of the factors, exact on `target`: factor i is requested on
 * target shrunk by the other factors' supports, which is what the mul
 * window rule needs to cover target.
 */
MotClass product_in_region(const std::vector<Factor>& factors, const Region& target);

} // namespace bunmot
