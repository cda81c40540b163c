#include "bunmot/random.hpp"

namespace bunmot {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Atom random_atom(Rng& rng) {
    Atom a = Atom::jac(static_cast<int>(uniform(rng, 0, 2)));
    const auto parts = uniform(rng, 0, 2);
    for (std::int64_t i = 0; i < parts; ++i) a = a * Atom::sym(static_cast<int>(uniform(rng, 1, 4)));
    return a;
}

MotClass random_class(Rng& rng, std::optional<int> genus, int max_terms) {
    MotClass::TermMap terms;
    const auto count = uniform(rng, 0, max_terms);
    for (std::int64_t i = 0; i < count; ++i) {
        Atom a = random_atom(rng);
        if (!genus) a.jac_exp = 0;
        terms[Term{a, uniform(rng, -4, 4)}] += uniform(rng, -3, 3);
    }
    return MotClass::exact(std::move(terms), genus);
}

Region random_window(Rng& rng) {
    auto end = [&](bool upper) -> Ext {
        if (uniform(rng, 0, 2) == 0) return upper ? Ext::pos_inf() : Ext::neg_inf();
        return upper ? uniform(rng, 2, 12) : uniform(rng, -12, 1);
    };
    auto interval = [&] {
        Ext lo = end(false);
        Ext hi = end(true);
        return Interval{lo, hi};
    };
    return {interval(), interval()};
}

Expr random_expr(Rng& rng, int depth) {
    using K = Expr::Kind;
    const auto pick = uniform(rng, 0, depth <= 0 ? 7 : 11);
    switch (pick) {
    case 0:
        return {K::Int, uniform(rng, 0, 50), {}};
    case 1:
        return {K::L, 0, {}};
    case 2:
        return {K::Jac, 0, {}};
    case 3:
        return {K::BGm, 0, {}};
    case 4:
        return {K::BGmC, 0, {}};
    case 5:
        return {K::P, uniform(rng, 0, 9), {}};
    case 6:
        return {K::Sym, uniform(rng, 0, 9), {}};
    case 7:
        return {K::Z, uniform(rng, -9, 9), {}};
    case 8:
    case 9: {
        Expr e{pick == 8 ? K::Sum : K::Prod, 0, {}};
        const auto n = uniform(rng, 2, 3);
        for (std::int64_t i = 0; i < n; ++i) e.children.push_back(random_expr(rng, depth - 1));
        return e;
    }
    case 10:
        return {K::Twist, uniform(rng, -20, 20), {random_expr(rng, depth - 1)}};
    default:
        return {K::Dual, 0, {random_expr(rng, depth - 1)}};
    }
}

} // namespace bunmot
