#pragma once

/**
 * @file quot.hpp
 * @brief Bialynicki-Birula strata of the Quot schemes Div_{n,d}(D).
 *
 * With N = n deg D - d, the fixed loci of the torus action are the products
 * C^{(m_1)} x ... x C^{(m_n)} over compositions m of N, and the stratum
 * attracted to the component m has codimension sum (i-1) m_i.
 */

#include "bunmot/curve.hpp"
#include "bunmot/interval.hpp"
#include "bunmot/motclass.hpp"
#include "bunmot/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bunmot {

using Composition = std::vector<std::int64_t>;

struct StratumInfo {
    Composition comp;
    std::int64_t codim_plus = 0;
    std::int64_t fixed_dim = 0;
    std::int64_t ambient_dim = 0;
};

/// All n-part compositions of N, lexicographically descending: (N,0,...) first.
std::vector<Composition> compositions(std::int64_t N, std::int64_t n);

StratumInfo stratum(const Composition& comp);

/// sum_m (prod_t Sym^{m_t}){c_m^+}, restricted to `window`.
MotClass quot_class(std::int64_t n, std::int64_t N, const Region& window = Region::all());

/// sum_m q^{c_m^+} prod_t |C^{(m_t)}|.
Integer quot_count(std::int64_t n, std::int64_t N, const ValidatedCurve& c);

/// Coefficient of t^N in prod_{i<n} P(q^i t) / ((1 - q^i t)(1 - q^{i+1} t)).
Integer quot_count_oracle(std::int64_t n, std::int64_t N, const ValidatedCurve& c);

struct StratumCount {
    StratumInfo info;
    std::vector<Integer> sym_counts;  ///< |C^{(m_t)}| per part
    Integer cell_count;               ///< q^{c_m^+} prod sym_counts
};

std::vector<StratumCount> strata_counts(std::int64_t n, std::int64_t N, const ValidatedCurve& c);

/// m + (n delta, 0, ..., 0); throws if the codimension changes.
Composition transition_target(const Composition& comp, std::int64_t delta, std::int64_t n);

/// BG_m . Jac . prod Sym^{m_i}{c}, c = sum_i i m_i over the (n-1) entries of m_flat.
MotClass stabilized_piece(const Composition& m_flat, int genus, const Region& window);

struct IdentityReport {
    bool equal = true;
    std::size_t compared = 0;
    std::optional<Term> first_mismatch;
};

/// sum over m_flat in N^{n-1} of prod Sym^{m_i}{i m_i} against prod_{i<n} zeta_class(i).
IdentityReport stabilized_sum_identity(std::int64_t n, const Region& window);

struct FixedDetClass {
    MotClass cls;
    std::vector<Composition> excluded;  ///< compositions with m_1 <= 2g - 2
};

/**
 * sum over compositions with m_1 > 2g-2 of P^{m_1-g} . prod_{i>=2} Sym^{m_i}{c_m^+}.
 * Throws UnstableRegime if any composition is excluded, unless allow_partial.
 */
FixedDetClass quot_class_fixed_det(std::int64_t n, std::int64_t N, int genus, const Region& window = Region::all(),
                                   bool allow_partial = false);

} // namespace bunmot
