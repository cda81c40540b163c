#pragma once

/**
 * @file random.hpp
 * @brief Small random generators for property checks. Deterministic for a given engine state.
 */

#include "bunmot/dsl.hpp"
#include "bunmot/interval.hpp"
#include "bunmot/motclass.hpp"

#include <cstdint>
#include <random>

namespace bunmot {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Jac^{0..2} times at most two Sym^{1..4} factors.
Atom random_atom(Rng& rng);

/// Up to max_terms terms with twists in [-4, 4] and coefficients in [-3, 3].
MotClass random_class(Rng& rng, std::optional<int> genus, int max_terms = 4);

/// A window with both ends finite or infinite at random, around the origin.
Region random_window(Rng& rng);

/// A syntax tree of depth at most `depth`, in the shape parse() produces.
Expr random_expr(Rng& rng, int depth);

} // namespace bunmot
