// Checks that a term is (or is not) a genuine d-copula: groundedness,
// uniform margins, d-increasingness, Lipschitz continuity. All checks are
// exact -- pass means no counterexample in the sample, never "within
// tolerance" -- and deterministic given (seed, sample counts).
#pragma once

#include <cstdint>
#include <string>

#include "copula.hpp"
#include "rational.hpp"

namespace nonex {

struct CheckResult {
  bool pass = true;
  std::string witness;  // concrete counterexample when pass is false
  long long checked = 0;
};

struct AxiomReport {
  bool claims_copula = true;
  CheckResult grounded, uniform_margins, d_increasing, lipschitz;
  long long points_checked = 0;
  long long boxes_checked = 0;
  uint64_t seed = 0;

  bool all_pass() const {
    return grounded.pass && uniform_margins.pass && d_increasing.pass &&
           lipschitz.pass;
  }
};

// C(u) = 0 whenever some coordinate is 0, on `samples` random points with at
// least one zero coordinate.
CheckResult check_grounded(const Copula& c, long long samples, uint64_t seed);

// C(1,...,1,t,1,...,1) = t exactly, cycling through the axes.
CheckResult check_uniform_margins(const Copula& c, long long samples, uint64_t seed);

// Nonnegative box volume on `boxes` random boxes; for dim <= 4 additionally
// enumerates every box with corners on the (d+1)-adic lattice, since
// singular copulas concentrate violations on cell boundaries. The witness is
// the most negative box found, earliest in enumeration order on ties
// (directed pass first, then random boxes in draw order).
CheckResult check_d_increasing(const Copula& c, long long boxes, uint64_t seed);

// |C(u) - C(v)| <= sum_k |u_k - v_k| on random pairs.
CheckResult check_lipschitz(const Copula& c, long long pairs, uint64_t seed);

// All four checks with a shared per-check budget.
AxiomReport verify_axioms(const Copula& c, long long samples, long long boxes,
                          uint64_t seed);

// Pairwise comparison of all (d-k)-dimensional margins of C on the full grid
// with step 1/m: any two margins of the same order differ by at most
// (d-1)/(d+1), which beats the same-order sharp bound (d-k-1)/(d-k).
struct MarginAudit {
  int dim = 0;
  int k = 0;
  long long pairs = 0;
  long long points_checked = 0;
  Rat max_pair_difference;
  Rat bound;       // (d-1)/(d+1)
  Rat next_bound;  // (d-k-1)/(d-k), the sharp bound at the margin's order
  bool pass = false;
  std::string witness;
};

MarginAudit audit_margins(const Copula& c, int k, int m);

}  // namespace nonex
