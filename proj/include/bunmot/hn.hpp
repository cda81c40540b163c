#pragma once

/**
 * @file hn.hpp
 * @brief Harder-Narasimhan type combinatorics and exhaustive-sequence bookkeeping.
 */

#include "bunmot/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bunmot {

struct HNBlock {
    std::int64_t rank = 1;
    std::int64_t degree = 0;

    auto operator<=>(const HNBlock&) const = default;
};

/// Blocks with strictly decreasing slopes d_i / n_i.
struct HNType {
    std::vector<HNBlock> blocks;

    std::int64_t rank() const;
    std::int64_t degree() const;
    std::string str() const;

    bool operator==(const HNType&) const = default;
};

/// Throws BadHNType unless ranks are positive and slopes strictly decrease.
void check_hn_type(const HNType& t);

/**
 * Every HN type of rank n and degree d with mu_1 <= mu_max_bound, ordered by
 * number of blocks and then lexicographically on (n_i, d_i).
 */
std::vector<HNType> enumerate_hn(std::int64_t n, std::int64_t d, const Rational& mu_max_bound);

/// (n^2 - sum_{i<=j} n_i n_j)(g-1) + sum_{i<j} (n_j d_i - n_i d_j).
std::int64_t codim_hn(const HNType& t, std::int64_t g);

/// sum_{i<j} (n_j d_i - n_i d_j) - n sum_{d_i > 0} d_i + n d.
std::int64_t key_inequality(const HNType& t);

/// Per-block Clifford-type bound on h^1(E^dual), summed over blocks.
std::int64_t h1_upper(const HNType& t, std::int64_t g);

/// codim_hn - n * h1_upper.
std::int64_t defect(const HNType& t, std::int64_t g);

/// l d0 - 2g + 1 - 1/n^2.
Rational mu_l(std::int64_t l, std::int64_t d0, std::int64_t g, std::int64_t n);

/// n (n l d0 - d) + n^2 (1 - g); throws NegativeRank when negative.
std::int64_t rank_Vl(std::int64_t n, std::int64_t d, std::int64_t g, std::int64_t l, std::int64_t d0);

} // namespace bunmot
