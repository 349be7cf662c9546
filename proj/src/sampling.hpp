// Deterministic, platform-independent random sampling of rational points,
// boxes, permutations, and delta parameters. mt19937_64 is bit-exact across
// platforms and the bounded-integer draw below() avoids the
// implementation-defined std::uniform_int_distribution.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "perm.hpp"
#include "point.hpp"
#include "rational.hpp"

namespace nonex {

class RatSampler {
 public:
  explicit RatSampler(uint64_t seed) : gen_(seed) {}

  // Uniform integer in [0, n), n >= 1. Rejection sampling, unbiased.
  uint64_t below(uint64_t n);

  // Uniform lattice coordinate k/D with D = 2^a * (d+1), a drawn from 0..6:
  // fine enough to straddle every breakpoint the built-in families use.
  Rat coord(int d);

  std::vector<Rat> point(int d);

  // Box with lo < hi on every axis, endpoints from coord(d).
  HyperBox box(int d);

  // Uniform random permutation (Fisher-Yates driven by below()).
  Perm perm(int d);

  // Valid delta parameters for even d: d/2 sorted values in [0, 1/(d+1)]
  // summing to (d/2 - 1)/(d+1), on the lattice 1/(360(d+1)). Constructive
  // (no rejection): each entry is drawn from its feasible range.
  std::vector<Rat> delta_values(int d);

 private:
  std::mt19937_64 gen_;
};

}  // namespace nonex
