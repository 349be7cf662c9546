// Pointwise upper bounds on |C(u) - C(u_pi)| valid for every copula C, and
// their combination into one report.
#pragma once

#include <optional>

#include "perm.hpp"
#include "point.hpp"
#include "rational.hpp"

namespace nonex {

struct BoundReport {
  int dim = 0;
  // Present iff pi moves exactly two indices.
  std::optional<Rat> transposition_bound;
  Rat min_spread_bound;
  Rat half_spread_bound;  // refined over pi's non-fixed indices when pi given
  Rat frechet_gap;
  Rat sharp_bound;  // (d-1)/(d+1)
  Rat combined;     // min of the populated entries
};

// |u_i - u_j| bounds the difference under the swap of axes i and j.
Rat transposition_bound(const UnitPoint& u, const Transposition& t);

// min{ u_min, sum(u_i - u_min), (d-1) + u_min - sum(u_i) }: chaining at most
// d-1 transpositions through the smallest coordinate.
Rat min_spread_bound(const UnitPoint& u);

// Sort ascending to v_1 <= ... <= v_d and sum v_i - v_1 over the upper half
// i = ceil(d/2)+1 .. d.
Rat half_spread_bound(const UnitPoint& u);
// Same, but also restricted to the values at pi's non-fixed indices (the
// tighter of the two); 0 for the identity.
Rat half_spread_bound(const UnitPoint& u, const Perm& pi);

// M_d(u) - W_d(u): no two functions between the Frechet-Hoeffding envelopes
// can differ by more at u.
Rat frechet_gap(const UnitPoint& u);

// (d-1)/(d+1), the sharp dimension-only bound.
Rat sharp_bound(int d);

// Permutation-free combination (no transposition entry, no refinement).
BoundReport pointwise_bound(const UnitPoint& u);
// Combination for a specific permutation.
BoundReport pointwise_bound(const UnitPoint& u, const Perm& pi);

}  // namespace nonex
