#include "bunmot/hn.hpp"

#include "bunmot/error.hpp"

#include <algorithm>
#include <functional>

namespace bunmot {

namespace {

/// floor(a * r) for a rational r.
std::int64_t floor_times(std::int64_t a, const Rational& r) {
    Integer num = r.get_num() * a;
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    return out.get_si();
}

/// Compares d1/n1 with d2/n2 for positive ranks.
int slope_cmp(const HNBlock& a, const HNBlock& b) {
    const auto l = a.degree * b.rank;
    const auto r = b.degree * a.rank;
    return l < r ? -1 : (l > r ? 1 : 0);
}

std::int64_t ceil_half(std::int64_t v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

} // namespace

std::int64_t HNType::rank() const {
    std::int64_t n = 0;
    for (const auto& b : blocks) n += b.rank;
    return n;
}

std::int64_t HNType::degree() const {
    std::int64_t d = 0;
    for (const auto& b : blocks) d += b.degree;
    return d;
}

std::string HNType::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(blocks[i].rank) + "," + std::to_string(blocks[i].degree) + ")";
    }
    return s + ")";
}

void check_hn_type(const HNType& t) {
    if (t.blocks.empty()) throw Error(ErrorKind::BadHNType, "no blocks");
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (t.blocks[i].rank < 1) throw Error(ErrorKind::BadHNType, "non-positive rank in " + t.str());
        if (i && slope_cmp(t.blocks[i - 1], t.blocks[i]) <= 0)
            throw Error(ErrorKind::BadHNType, "slopes not strictly decreasing in " + t.str());
    }
}

std::vector<HNType> enumerate_hn(std::int64_t n, std::int64_t d, const Rational& mu_max_bound) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "need n >= 1");
    std::vector<HNType> out;
    HNType cur;
    // Every later block has slope below the current one, hence below the bound,
    // so the remaining degree is at most floor(rest * bound).
    std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rank_left, std::int64_t deg_left) {
        for (std::int64_t ni = 1; ni <= rank_left; ++ni) {
            const std::int64_t rest = rank_left - ni;
            std::int64_t hi = floor_times(ni, mu_max_bound);
            std::int64_t lo = deg_left - floor_times(rest, mu_max_bound);
            if (rest == 0) {
                if (deg_left > hi) continue;
                lo = hi = deg_left;
            }
            for (std::int64_t di = lo; di <= hi; ++di) {
                const HNBlock b{ni, di};
                if (!cur.blocks.empty() && slope_cmp(cur.blocks.back(), b) <= 0) continue;
                cur.blocks.push_back(b);
                if (rest == 0)
                    out.push_back(cur);
                else
                    rec(rest, deg_left - di);
                cur.blocks.pop_back();
            }
        }
    };
    rec(n, d);
    std::sort(out.begin(), out.end(), [](const HNType& a, const HNType& b) {
        if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
        return a.blocks < b.blocks;
    });
    return out;
}

std::int64_t codim_hn(const HNType& t, std::int64_t g) {
    check_hn_type(t);
    const auto n = t.rank();
    std::int64_t pairs = 0;
    std::int64_t cross = 0;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        for (std::size_t j = i; j < t.blocks.size(); ++j) {
            const auto& a = t.blocks[i];
            const auto& b = t.blocks[j];
            pairs += a.rank * b.rank;
            if (j > i) cross += b.rank * a.degree - a.rank * b.degree;
        }
    }
    return (n * n - pairs) * (g - 1) + cross;
}

std::int64_t key_inequality(const HNType& t) {
    check_hn_type(t);
    const auto n = t.rank();
    std::int64_t cross = 0;
    std::int64_t positive = 0;
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (t.blocks[i].degree > 0) positive += t.blocks[i].degree;
        for (std::size_t j = i + 1; j < t.blocks.size(); ++j)
            cross += t.blocks[j].rank * t.blocks[i].degree - t.blocks[i].rank * t.blocks[j].degree;
    }
    return cross - n * positive + n * t.degree();
}

std::int64_t h1_upper(const HNType& t, std::int64_t g) {
    check_hn_type(t);
    std::int64_t total = 0;
    for (const auto& b : t.blocks) {
        if (b.degree > 0) {
            total += b.rank * (g - 1) + b.degree;
        } else if (b.degree >= -(2 * g - 2) * b.rank) {
            total += std::max<std::int64_t>(0, b.rank + ceil_half(b.degree) + g - 1);
        }
    }
    return total;
}

std::int64_t defect(const HNType& t, std::int64_t g) { return codim_hn(t, g) - t.rank() * h1_upper(t, g); }

Rational mu_l(std::int64_t l, std::int64_t d0, std::int64_t g, std::int64_t n) {
    if (l < 0 || d0 < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "need l >= 0, d0 >= 1, n >= 1");
    Rational r(l * d0 - 2 * g + 1);
    r -= Rational(1, static_cast<unsigned long>(n * n));
    return r;
}

std::int64_t rank_Vl(std::int64_t n, std::int64_t d, std::int64_t g, std::int64_t l, std::int64_t d0) {
    const std::int64_t r = n * (n * l * d0 - d) + n * n * (1 - g);
    if (r < 0) throw Error(ErrorKind::NegativeRank, "rank of V_l is " + std::to_string(r));
    return r;
}

} // namespace bunmot
