#include "bunmot/quot.hpp"

#include "bunmot/error.hpp"

#include <functional>
#include <numeric>

namespace bunmot {

namespace {

void check_shape(std::int64_t n, std::int64_t N) {
    if (n < 1) throw Error(ErrorKind::BadComposition, "need n >= 1");
    if (N < 0) throw Error(ErrorKind::NegativeN, "N = " + std::to_string(N));
}

std::int64_t weighted(const Composition& m, std::int64_t first_weight) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i < m.size(); ++i) c += (first_weight + static_cast<std::int64_t>(i)) * m[i];
    return c;
}

Atom sym_product(Composition::const_iterator begin, Composition::const_iterator end) {
    Atom a;
    for (auto it = begin; it != end; ++it) a = a * Atom::sym(static_cast<int>(*it));
    return a;
}

} // namespace

std::vector<Composition> compositions(std::int64_t N, std::int64_t n) {
    check_shape(n, N);
    std::vector<Composition> out;
    Composition cur(static_cast<std::size_t>(n), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i + 1 == cur.size()) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (std::int64_t v = left; v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, N);
    return out;
}

StratumInfo stratum(const Composition& comp) {
    if (comp.empty()) throw Error(ErrorKind::BadComposition, "empty composition");
    StratumInfo s;
    s.comp = comp;
    for (auto m : comp) {
        if (m < 0) throw Error(ErrorKind::BadComposition, "negative part");
        s.fixed_dim += m;
    }
    s.codim_plus = weighted(comp, 0);
    s.ambient_dim = static_cast<std::int64_t>(comp.size()) * s.fixed_dim;
    return s;
}

MotClass quot_class(std::int64_t n, std::int64_t N, const Region& window) {
    MotClass::TermMap terms;
    for (const auto& m : compositions(N, n)) terms[Term{sym_product(m.begin(), m.end()), stratum(m).codim_plus}] += 1;
    return restrict_to(MotClass::exact(std::move(terms)), window);
}

Integer quot_count(std::int64_t n, std::int64_t N, const ValidatedCurve& c) {
    const auto counts = sym_counts(c, N);
    Integer total = 0;
    for (const auto& m : compositions(N, n)) {
        Integer cell = ipow(c.q(), stratum(m).codim_plus);
        for (auto part : m) cell *= counts[static_cast<std::size_t>(part)];
        total += cell;
    }
    return total;
}

Integer quot_count_oracle(std::int64_t n, std::int64_t N, const ValidatedCurve& c) {
    check_shape(n, N);
    const auto len = static_cast<std::size_t>(N) + 1;
    std::vector<Integer> series(len, 0);
    series[0] = 1;
    auto times_poly = [&](const std::vector<Integer>& p) {
        std::vector<Integer> out(len, 0);
        for (std::size_t a = 0; a < len; ++a)
            for (std::size_t b = 0; b < p.size() && a + b < len; ++b) out[a + b] += series[a] * p[b];
        series = std::move(out);
    };
    auto over_one_minus = [&](const Integer& r) {  // series / (1 - r t)
        for (std::size_t k = 1; k < len; ++k) series[k] += r * series[k - 1];
    };
    for (std::int64_t i = 0; i < n; ++i) {
        const Integer qi = ipow(c.q(), i);
        std::vector<Integer> p = c.zeta_numerator();
        Integer scale = 1;
        for (auto& a : p) {
            a *= scale;
            scale *= qi;
        }
        times_poly(p);
        over_one_minus(qi);
        over_one_minus(qi * c.q());
    }
    return series[static_cast<std::size_t>(N)];
}

std::vector<StratumCount> strata_counts(std::int64_t n, std::int64_t N, const ValidatedCurve& c) {
    const auto counts = sym_counts(c, N);
    std::vector<StratumCount> out;
    for (const auto& m : compositions(N, n)) {
        StratumCount s{stratum(m), {}, ipow(c.q(), stratum(m).codim_plus)};
        for (auto part : m) {
            s.sym_counts.push_back(counts[static_cast<std::size_t>(part)]);
            s.cell_count *= s.sym_counts.back();
        }
        out.push_back(std::move(s));
    }
    return out;
}

Composition transition_target(const Composition& comp, std::int64_t delta, std::int64_t n) {
    if (static_cast<std::int64_t>(comp.size()) != n)
        throw Error(ErrorKind::BadComposition, "composition has " + std::to_string(comp.size()) + " parts, expected n");
    if (delta < 1) throw Error(ErrorKind::InvalidArgument, "delta must be positive");
    Composition out = comp;
    out[0] += n * delta;
    if (stratum(out).codim_plus != stratum(comp).codim_plus)
        throw Error(ErrorKind::InvalidArgument, "transition changed the stratum codimension");
    return out;
}

MotClass stabilized_piece(const Composition& m_flat, int genus, const Region& window) {
    for (auto m : m_flat)
        if (m < 0) throw Error(ErrorKind::BadComposition, "negative part");
    MotClass::TermMap core;
    core[Term{Atom::jac() * sym_product(m_flat.begin(), m_flat.end()), weighted(m_flat, 1)}] = 1;
    return product_in_region({Factor::bgm_hom(), Factor::of(MotClass::exact(std::move(core), genus))}, window);
}

IdentityReport stabilized_sum_identity(std::int64_t n, const Region& window) {
    if (n < 1) throw Error(ErrorKind::BadComposition, "need n >= 1");
    // Every term below has vd >= twist = sum i m_i, so either upper end bounds the enumeration.
    const Ext cap = min(window.vd.hi, window.twist.hi);
    if (!cap.finite()) throw Error(ErrorKind::UnboundedWindow, "stabilized sum on " + window.str());
    const std::int64_t k = n - 1;
    MotClass::TermMap terms;
    Composition m(static_cast<std::size_t>(k), 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t used) {
        if (i == m.size()) {
            terms[Term{sym_product(m.begin(), m.end()), used}] += 1;
            return;
        }
        const auto w = static_cast<std::int64_t>(i) + 1;
        for (std::int64_t v = 0; used + w * v <= cap.value(); ++v) {
            m[i] = v;
            rec(i + 1, used + w * v);
        }
        m[i] = 0;
    };
    rec(0, 0);
    const Region support{Interval::at_least(0), k == 0 ? Interval::point(0) : Interval::at_least(0)};
    const MotClass lhs = MotClass::truncated(std::move(terms), window, support);

    std::vector<Factor> factors;
    for (std::int64_t i = 1; i < n; ++i) factors.push_back(Factor::zeta(i));
    const MotClass rhs = product_in_region(factors, window);
    const auto cmp = compare(lhs, rhs);
    return {cmp.equal, cmp.compared, cmp.first_mismatch};
}

FixedDetClass quot_class_fixed_det(std::int64_t n, std::int64_t N, int genus, const Region& window,
                                   bool allow_partial) {
    FixedDetClass out;
    MotClass::TermMap terms;
    for (const auto& m : compositions(N, n)) {
        if (m[0] <= 2 * genus - 2) {
            out.excluded.push_back(m);
            continue;
        }
        const auto c = stratum(m).codim_plus;
        const Atom rest = sym_product(m.begin() + 1, m.end());
        for (std::int64_t i = 0; i <= m[0] - genus; ++i) terms[Term{rest, c + i}] += 1;
    }
    if (!out.excluded.empty() && !allow_partial) {
        std::string list;
        for (const auto& m : out.excluded) {
            list += list.empty() ? "(" : ", (";
            for (std::size_t i = 0; i < m.size(); ++i) list += (i ? "," : "") + std::to_string(m[i]);
            list += ")";
        }
        throw Error(ErrorKind::UnstableRegime, "compositions with m_1 <= 2g-2: " + list);
    }
    out.cls = restrict_to(MotClass::exact(std::move(terms)), window);
    return out;
}

} // namespace bunmot
