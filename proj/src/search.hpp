// Certified grid maximization of |C(u) - C(u_pi)| over the unit grid, the
// normalized non-exchangeability measure mu, and the set of maximal points.
//
// Certificate: each copula is 1-Lipschitz per coordinate, so the difference
// is 2-Lipschitz in the sum metric; every point of [0,1]^d lies within sum
// distance d*h/2 of a grid node, hence the continuum maximum is at most the
// grid maximum + d*h.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copula.hpp"
#include "perm.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "shuffle.hpp"

namespace nonex {

struct SearchReport {
  std::vector<Rat> best_point;
  Perm best_perm;
  Rat best_value;
  Rat grid_step;        // h = 1/m
  Rat certified_upper;  // best_value + d*h
  Rat gap;              // certified_upper - best_value
  long long evaluations = 0;  // grid nodes examined, (m+1)^d
  bool float_mode = false;

  explicit SearchReport(Perm pi) : best_perm(std::move(pi)) {}
};

struct MuReport {
  Rat mu;                  // (d+1)/(d-1) * inner.best_value
  Rat mu_certified_upper;  // (d+1)/(d-1) * inner.certified_upper
  bool exhaustive = true;  // enumeration covered all of S_d (up to inverses)
  long long perms_scanned = 0;
  SearchReport inner;

  explicit MuReport(SearchReport r) : inner(std::move(r)) {}
};

// Exhaustive scan of |C(u) - C(u_pi)| over the grid {0, 1/m, ..., 1}^d.
// m must be a positive multiple of d+1 so the grid contains u*. Argmax ties
// break to the lexicographically smallest point. threads only changes the
// wall time, never the report. float_mode scans in double precision and
// re-evaluates the winner exactly: the certificate is then heuristic, and
// the report says so.
SearchReport max_difference(const Copula& c, const Perm& pi, int m,
                            int threads = 1, bool float_mode = false);

// Maximize over permutations as well: exhaustive over S_d (skipping the
// lexicographically larger of each inverse pair, which cannot change the
// maximum) when d! <= perm_budget; otherwise scans the reversal plus
// perm_budget seeded random permutations and flags the result as a lower
// bound. Ties break to the smallest point, then the smallest enumerated
// permutation images.
MuReport mu_measure(const Copula& c, int m, long long perm_budget,
                    uint64_t seed, int threads = 1, bool float_mode = false);

// All grid points u for which some permutation attains
// |C(u) - C(u_pi)| = (d-1)/(d+1) exactly, in lexicographic point order.
// Exhaustive over S_d; meant for small d.
std::vector<std::vector<Rat>> sharp_attaining_points(const Copula& c, int m,
                                                     int threads = 1);

struct ManifoldPoint {
  std::vector<Rat> u;                // sorted canonical coordinates
  std::optional<DeltaVector> delta;  // present iff dim is even
};

struct ManifoldCheck {
  bool in = false;
  std::optional<DeltaVector> delta;  // present iff in and dim is even
};

// Does some copula attain the sharp bound at u (up to relabeling)? Sorts the
// input; odd d demands exactly u*, even d = 2n demands n coordinates at
// (d-1)/(d+1) and the rest at d/(d+1) + delta_j for valid delta.
ManifoldCheck is_in_manifold(const UnitPoint& u);

// Odd d (and d = 2): the single canonical point. Even d >= 4: count points
// with delta drawn by the deterministic sampler.
std::vector<ManifoldPoint> sample_manifold(int d, int count, uint64_t seed);

}  // namespace nonex
