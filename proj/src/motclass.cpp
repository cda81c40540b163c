#include "bunmot/motclass.hpp"

#include "bunmot/curve.hpp"
#include "bunmot/error.hpp"
#include "bunmot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>

namespace bunmot {

namespace {

const char* const kDot = "·";
const char* const kMinus = "−";

void normalize_grading(Interval& window, const Interval& support) {
    if (support.is_empty()) {
        window = Interval::all();
        return;
    }
    if (window.is_empty()) return;
    if (window.lo <= support.lo) window.lo = Ext::neg_inf();
    if (window.hi >= support.hi) window.hi = Ext::pos_inf();
}

/// Per-grading window of a product; windows must already be normalised.
Interval product_grading(const Interval& wx, const Interval& sx, const Interval& wy, const Interval& sy) {
    if (sx.is_empty() || sy.is_empty()) return Interval::all();
    Ext lo = Ext::neg_inf();
    if (!wx.lo.is_neg_inf()) lo = max(lo, wx.lo + sy.hi);
    if (!wy.lo.is_neg_inf()) lo = max(lo, wy.lo + sx.hi);
    Ext hi = Ext::pos_inf();
    if (!wx.hi.is_pos_inf()) hi = min(hi, wx.hi + sy.lo);
    if (!wy.hi.is_pos_inf()) hi = min(hi, wy.hi + sx.lo);
    return {lo, hi};
}

std::string twist_text(std::int64_t k) {
    return k < 0 ? std::string(kMinus) + std::to_string(-k) : std::to_string(k);
}

} // namespace

// ---- Atom ---------------------------------------------------------------

Atom Atom::sym(int j) {
    if (j < 0) throw Error(ErrorKind::InvalidArgument, "negative symmetric power");
    Atom a;
    if (j > 0) a.sym_parts.push_back(j);
    return a;
}

std::int64_t Atom::dimension(int genus) const {
    std::int64_t d = static_cast<std::int64_t>(jac_exp) * genus;
    for (int j : sym_parts) d += j;
    return d;
}

Atom Atom::operator*(const Atom& other) const {
    Atom r;
    r.jac_exp = jac_exp + other.jac_exp;
    r.sym_parts.reserve(sym_parts.size() + other.sym_parts.size());
    std::merge(sym_parts.begin(), sym_parts.end(), other.sym_parts.begin(), other.sym_parts.end(),
               std::back_inserter(r.sym_parts));
    return r;
}

// ---- MotClass -----------------------------------------------------------

std::optional<int> unify_genus(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b && *a != *b)
        throw Error(ErrorKind::GenusMismatch, "genus " + std::to_string(*a) + " vs " + std::to_string(*b));
    return a ? a : b;
}

MotClass MotClass::exact(TermMap terms, std::optional<int> genus) {
    MotClass c;
    c.terms_ = std::move(terms);
    c.genus_ = genus;
    c.window_ = Region::all();
    for (auto it = c.terms_.begin(); it != c.terms_.end();) {
        if (it->second == 0) {
            it = c.terms_.erase(it);
            continue;
        }
        const auto v = c.vd(it->first);
        c.support_ = c.support_.hull({Interval::point(v), Interval::point(it->first.twist)});
        ++it;
    }
    c.normalize();
    return c;
}

MotClass MotClass::truncated(TermMap terms, Region window, Region support, std::optional<int> genus) {
    MotClass c;
    c.terms_ = std::move(terms);
    c.window_ = window;
    c.support_ = support;
    c.genus_ = genus;
    c.normalize();
    return c;
}

Integer MotClass::coefficient(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::int64_t MotClass::vd(const Term& t) const {
    if (t.atom.jac_exp > 0 && !genus_)
        throw Error(ErrorKind::UnboundGenus, "a class containing Jac needs a genus binding");
    return t.atom.dimension(genus_.value_or(0)) + t.twist;
}

void MotClass::normalize() {
    normalize_grading(window_.vd, support_.vd);
    normalize_grading(window_.twist, support_.twist);
    if (window_.is_empty()) throw Error(ErrorKind::EmptyWindow, "completeness window is empty");
    for (auto it = terms_.begin(); it != terms_.end();) {
        const auto v = vd(it->first);
        const auto k = it->first.twist;
        if (it->second != 0 && !support_.contains(v, k))
            throw Error(ErrorKind::InvalidArgument, "term outside the declared support " + support_.str());
        if (it->second == 0 || !window_.contains(v, k))
            it = terms_.erase(it);
        else
            ++it;
    }
}

// ---- ring operations ----------------------------------------------------

MotClass add(const MotClass& x, const MotClass& y) {
    const auto genus = unify_genus(x.genus(), y.genus());
    MotClass::TermMap terms = x.terms();
    for (const auto& [t, c] : y.terms()) terms[t] += c;
    const Region window = x.window().intersect(y.window());
    if (window.is_empty()) throw Error(ErrorKind::EmptyWindow, x.window().str() + " ∩ " + y.window().str());
    return MotClass::truncated(std::move(terms), window, x.support().hull(y.support()), genus);
}

MotClass scale(const MotClass& x, const Integer& s) {
    MotClass::TermMap terms;
    if (s != 0)
        for (const auto& [t, c] : x.terms()) terms.emplace(t, c * s);
    return MotClass::truncated(std::move(terms), x.window(), x.support(), x.genus());
}

MotClass sub(const MotClass& x, const MotClass& y) { return add(x, scale(y, -1)); }

MotClass mul(const MotClass& x, const MotClass& y) {
    const auto genus = unify_genus(x.genus(), y.genus());
    const Region window{product_grading(x.window().vd, x.support().vd, y.window().vd, y.support().vd),
                        product_grading(x.window().twist, x.support().twist, y.window().twist, y.support().twist)};
    if (window.is_empty())
        throw Error(ErrorKind::EmptyWindow, "product of windows " + x.window().str() + " and " + y.window().str());
    const Region support = x.support().plus(y.support());
    MotClass::TermMap terms;
    const int g = genus.value_or(0);
    for (const auto& [tx, cx] : x.terms()) {
        for (const auto& [ty, cy] : y.terms()) {
            Term t{tx.atom * ty.atom, tx.twist + ty.twist};
            if (!window.contains(t.atom.dimension(g) + t.twist, t.twist)) continue;
            terms[t] += cx * cy;
        }
    }
    return MotClass::truncated(std::move(terms), window, support, genus);
}

MotClass twist(const MotClass& x, std::int64_t k) {
    MotClass::TermMap terms;
    for (const auto& [t, c] : x.terms()) terms.emplace(Term{t.atom, t.twist + k}, c);
    return MotClass::truncated(std::move(terms), x.window().shifted(k), x.support().shifted(k), x.genus());
}

MotClass dual(const MotClass& x, int genus) {
    const auto g = unify_genus(x.genus(), genus);
    MotClass::TermMap terms;
    for (const auto& [t, c] : x.terms()) terms.emplace(Term{t.atom, -t.atom.dimension(*g) - t.twist}, c);
    const Region window{x.window().twist.negated(), x.window().vd.negated()};
    const Region support{x.support().twist.negated(), x.support().vd.negated()};
    return MotClass::truncated(std::move(terms), window, support, g);
}

MotClass restrict_to(const MotClass& x, const Region& region) {
    const Region window = x.window().intersect(region);
    if (window.is_empty()) throw Error(ErrorKind::EmptyWindow, "restriction to " + region.str());
    return MotClass::truncated(x.terms(), window, x.support(), x.genus());
}

// ---- reduction and realization -----------------------------------------

MotClass reduce_large_sym(const MotClass& x, int genus, AssumeRationalPoint) {
    const auto g = unify_genus(x.genus(), genus);
    const int threshold = std::max(1, 2 * genus - 1);

    const Region& w = x.window();
    Region window{w.vd.hi.is_pos_inf() ? Interval{w.vd.lo, Ext::pos_inf()} : Interval::empty(),
                  w.twist.lo.is_neg_inf() ? Interval{Ext::neg_inf(), w.twist.hi} : Interval::empty()};
    if (window.is_empty())
        throw Error(ErrorKind::EmptyWindow,
                    "reduction needs a window unbounded above in vd and below in twist, got " + w.str());
    const Region& s = x.support();
    Region support = s;
    if (!s.vd.is_empty()) {
        support.vd = {min(s.vd.lo, s.twist.lo), s.vd.hi};
        support.twist = {s.twist.lo, max(s.twist.hi, s.vd.hi)};
    }

    MotClass::TermMap terms;
    for (const auto& [t, c] : x.terms()) {
        Atom base;
        base.jac_exp = genus == 0 ? 0 : t.atom.jac_exp;
        // shifts[s] = number of ways the replaced P^{j-g} factors contribute twist s
        std::vector<Integer> shifts{1};
        for (int j : t.atom.sym_parts) {
            if (j < threshold) {
                base.sym_parts.push_back(j);
                continue;
            }
            if (genus > 0) ++base.jac_exp;
            const int width = j - genus;
            std::vector<Integer> next(shifts.size() + static_cast<std::size_t>(width), 0);
            for (std::size_t a = 0; a < shifts.size(); ++a)
                for (int i = 0; i <= width; ++i) next[a + static_cast<std::size_t>(i)] += shifts[a];
            shifts = std::move(next);
        }
        for (std::size_t k = 0; k < shifts.size(); ++k)
            terms[Term{base, t.twist + static_cast<std::int64_t>(k)}] += c * shifts[k];
    }
    return MotClass::truncated(std::move(terms), window, support, g);
}

Integer atom_count(const Atom& a, const ValidatedCurve& c) {
    Integer r = ipow(jac_count(c), a.jac_exp);
    for (int j : a.sym_parts) r *= sym_count(c, j);
    return r;
}

LaurentQ count_realize(const MotClass& x, const ValidatedCurve& c) {
    unify_genus(x.genus(), c.genus());
    const Region& w = x.window();
    if (!w.vd.hi.is_pos_inf() || !w.twist.hi.is_pos_inf())
        throw Error(ErrorKind::WindowUnboundedMismatch,
                    "realization needs a window unbounded above, got " + w.str());
    const Ext order = min(-w.vd.lo, -w.twist.lo);
    LaurentQ r(c.q(), order.finite() ? LaurentQ::Order(order.value()) : std::nullopt);
    std::map<Atom, Integer> counts;
    for (const auto& [t, coeff] : x.terms()) {
        auto it = counts.find(t.atom);
        if (it == counts.end()) it = counts.emplace(t.atom, atom_count(t.atom, c)).first;
        r.add_term(-t.twist, Rational(coeff * it->second));
    }
    return r;
}

Comparison compare(const MotClass& x, const MotClass& y) {
    Comparison out;
    out.common = x.window().intersect(y.window());
    if (x.genus() && y.genus() && *x.genus() != *y.genus()) {
        out.equal = false;
        return out;
    }
    const int g = x.genus().value_or(y.genus().value_or(0));
    auto inside = [&](const Term& t) { return out.common.contains(t.atom.dimension(g) + t.twist, t.twist); };
    std::map<Term, std::pair<Integer, Integer>> merged;
    for (const auto& [t, c] : x.terms())
        if (inside(t)) merged[t].first = c;
    for (const auto& [t, c] : y.terms())
        if (inside(t)) merged[t].second = c;
    out.compared = merged.size();
    for (const auto& [t, cc] : merged) {
        if (cc.first != cc.second) {
            out.equal = false;
            out.first_mismatch = t;
            break;
        }
    }
    return out;
}

// ---- text form ----------------------------------------------------------

std::string to_text(const Atom& a) {
    if (a.is_unit()) return "1";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += kDot;
        s += part;
    };
    if (a.jac_exp == 1) append("Jac");
    if (a.jac_exp > 1) append("Jac^" + std::to_string(a.jac_exp));
    for (int j : a.sym_parts) append("Sym^" + std::to_string(j));
    return s;
}

std::string to_text(const MotClass& x) {
    if (x.is_zero()) return "0";
    std::vector<std::pair<Term, Integer>> rows(x.terms().begin(), x.terms().end());
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        return std::forward_as_tuple(x.vd(a.first), a.first.twist, a.first.atom) <
               std::forward_as_tuple(x.vd(b.first), b.first.twist, b.first.atom);
    });
    std::string out;
    bool first = true;
    for (const auto& [t, c] : rows) {
        const bool negative = c < 0;
        if (first)
            out += negative ? kMinus : "";
        else
            out += negative ? std::string(" ") + kMinus + " " : " + ";
        first = false;
        const Integer mag = abs(c);
        if (mag != 1) out += mag.get_str() + kDot;
        out += to_text(t.atom) + "{" + twist_text(t.twist) + "}";
    }
    return out;
}

namespace {

class TermTextParser {
public:
    explicit TermTextParser(const std::string& s) : s_(s) {}

    MotClass::TermMap parse() {
        MotClass::TermMap out;
        skip_ws();
        if (s_.substr(pos_) == "0") return out;
        bool negative = eat_minus();
        while (true) {
            skip_ws();
            auto [t, c] = term();
            out[t] += negative ? Integer(-c) : c;
            skip_ws();
            if (pos_ == s_.size()) break;
            if (eat("+"))
                negative = false;
            else if (eat_minus())
                negative = true;
            else
                fail("'+' or '−'");
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(ErrorKind::SyntaxError, "at offset " + std::to_string(pos_) + ": expected " + expected);
    }
    void skip_ws() {
        while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
    }
    bool eat(const std::string& tok) {
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    bool eat_minus() { return eat(kMinus) || eat("-"); }
    bool digits(Integer& out) {
        const auto start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return false;
        out = Integer(s_.substr(start, pos_ - start));
        return true;
    }
    int small_nat() {
        Integer v;
        if (!digits(v) || !v.fits_sint_p()) fail("a natural number");
        return static_cast<int>(v.get_si());
    }
    std::pair<Term, Integer> term() {
        Integer coeff = 1;
        const auto start = pos_;
        Integer lead;
        if (digits(lead)) {
            if (eat(kDot))
                coeff = lead;
            else
                pos_ = start;
        }
        Atom atom;
        if (eat("1")) {
            // unit atom
        } else {
            do {
                if (eat("Jac")) {
                    atom.jac_exp += eat("^") ? small_nat() : 1;
                } else if (eat("Sym^")) {
                    atom = atom * Atom::sym(small_nat());
                } else {
                    fail("an atom");
                }
            } while (eat(kDot));
        }
        if (!eat("{")) fail("'{'");
        const bool neg = eat_minus();
        Integer k;
        if (!digits(k) || !k.fits_slong_p()) fail("a twist");
        if (!eat("}")) fail("'}'");
        return {Term{atom, neg ? -k.get_si() : k.get_si()}, coeff};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

MotClass::TermMap parse_terms(const std::string& text) { return TermTextParser(text).parse(); }

// ---- constructors -------------------------------------------------------

MotClass unit_class() { return MotClass::exact({{Term{Atom::unit(), 0}, 1}}); }

MotClass lefschetz(std::int64_t k) { return MotClass::exact({{Term{Atom::unit(), k}, 1}}); }

MotClass jac_class(int genus) {
    if (genus < 0) throw Error(ErrorKind::InvalidArgument, "negative genus");
    return MotClass::exact({{Term{Atom::jac(), 0}, 1}}, genus);
}

MotClass sym_class(int j) { return MotClass::exact({{Term{Atom::sym(j), 0}, 1}}); }

MotClass projective_space(std::int64_t n) {
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "projective space of negative dimension");
    MotClass::TermMap terms;
    for (std::int64_t i = 0; i <= n; ++i) terms.emplace(Term{Atom::unit(), i}, 1);
    return MotClass::exact(std::move(terms));
}

namespace {

/// Largest j >= 0 with a*j inside `range` for every constraint (a, range); the
/// constraints are all monotone in j. Empty optional when nothing bounds j.
std::optional<std::int64_t> last_index(std::initializer_list<std::pair<std::int64_t, Interval>> constraints) {
    std::optional<std::int64_t> best;
    for (const auto& [a, range] : constraints) {
        if (range.is_empty()) return -1;
        if (a > 0 && range.hi.finite()) {
            const auto h = range.hi.value();
            const std::int64_t j = h < 0 ? -1 : h / a;
            best = best ? std::min(*best, j) : j;
        } else if (a < 0 && range.lo.finite()) {
            const auto l = range.lo.value();
            const std::int64_t j = l > 0 ? -1 : (-l) / (-a);
            best = best ? std::min(*best, j) : j;
        }
    }
    return best;
}

} // namespace

Region zeta_support(std::int64_t i) {
    if (i >= 0) return {Interval::at_least(0), i == 0 ? Interval::point(0) : Interval::at_least(0)};
    return {Interval::at_most(0), Interval::at_most(0)};
}

MotClass zeta_class(std::int64_t i, const Region& window) {
    if (i == -1)
        throw Error(ErrorKind::NonConvergentDirection, "Sym^j{-j} has vd 0 for every j");
    const auto last = last_index({{1 + i, window.vd}, {i, window.twist}});
    if (!last) throw Error(ErrorKind::UnboundedWindow, "zeta_class(" + std::to_string(i) + ") on " + window.str());
    MotClass::TermMap terms;
    for (std::int64_t j = 0; j <= *last; ++j) terms.emplace(Term{Atom::sym(static_cast<int>(j)), i * j}, 1);
    return MotClass::truncated(std::move(terms), window, zeta_support(i));
}

Region bgm_hom_support() { return {Interval::at_least(0), Interval::at_least(0)}; }

MotClass bgm_hom(const Region& window) {
    const auto last = last_index({{1, window.vd}, {1, window.twist}});
    if (!last) throw Error(ErrorKind::UnboundedWindow, "bgm_hom on " + window.str());
    MotClass::TermMap terms;
    for (std::int64_t j = 0; j <= *last; ++j) terms.emplace(Term{Atom::unit(), j}, 1);
    return MotClass::truncated(std::move(terms), window, bgm_hom_support());
}

Region bgm_k0_support() { return {Interval::at_most(-1), Interval::at_most(-1)}; }

MotClass bgm_k0(const Region& window) {
    const auto last = last_index({{-1, window.vd}, {-1, window.twist}});
    if (!last) throw Error(ErrorKind::UnboundedWindow, "bgm_k0 on " + window.str());
    MotClass::TermMap terms;
    for (std::int64_t j = 1; j <= *last; ++j) terms.emplace(Term{Atom::unit(), -j}, 1);
    return MotClass::truncated(std::move(terms), window, bgm_k0_support());
}

Factor Factor::of(const MotClass& exact_class) {
    return {exact_class.support(), [exact_class](const Region&) { return exact_class; }};
}

Factor Factor::zeta(std::int64_t i) {
    return {zeta_support(i), [i](const Region& r) { return zeta_class(i, r); }};
}

Factor Factor::bgm_hom() {
    return {bgm_hom_support(), [](const Region& r) { return bunmot::bgm_hom(r); }};
}

Factor Factor::bgm_k0() {
    return {bgm_k0_support(), [](const Region& r) { return bunmot::bgm_k0(r); }};
}

MotClass product_in_region(const std::vector<Factor>& factors, const Region& target) {
    for (const auto& f : factors)
        if (f.support.is_empty()) return MotClass();
    MotClass acc = unit_class();
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Region others{Interval::point(0), Interval::point(0)};
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i) others = others.plus(factors[j].support);
        const Region request{{target.vd.lo - others.vd.hi, target.vd.hi - others.vd.lo},
                             {target.twist.lo - others.twist.hi, target.twist.hi - others.twist.lo}};
        acc = mul(acc, factors[i].build(request));
    }
    return restrict_to(acc, target);
}

} // namespace bunmot
