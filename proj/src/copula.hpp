#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "perm.hpp"
#include "point.hpp"
#include "rational.hpp"
#include "shuffle.hpp"

namespace nonex {

// Immutable d-variate term on [0,1]^d. Evaluation is exact (rational) with a
// parallel double-precision path for exploratory scans.
class Copula {
 public:
  virtual ~Copula() = default;
  int dim() const { return dim_; }
  // False only for terms known not to be genuine copulas (the lower
  // Frechet-Hoeffding function above dimension 2).
  virtual bool claims_copula() const { return true; }
  virtual std::string describe() const = 0;

  Rat eval(std::span<const Rat> u) const;
  double eval_f(std::span<const double> u) const;

 protected:
  explicit Copula(int d);
  virtual Rat do_eval(std::span<const Rat> u) const = 0;
  virtual double do_eval_f(std::span<const double> u) const = 0;

 private:
  int dim_;
};

using CopulaPtr = std::shared_ptr<const Copula>;

// min(u_1, ..., u_d) -- upper Frechet-Hoeffding bound, a copula in every dim.
CopulaPtr frechet_upper(int d);
// max(sum u_i - d + 1, 0) -- lower Frechet-Hoeffding bound; a copula only for
// d = 2, and claims_copula() reports that.
CopulaPtr frechet_lower(int d);
// prod(u_1, ..., u_d).
CopulaPtr independence(int d);
// The maximally non-exchangeable copula in closed form: a sum over cyclic
// index windows of clipped minima, anchored at u_star(d).
CopulaPtr c_star_closed_form(int d);
// Shuffle-of-min copula; validates the structure and throws ParseError with
// the first failing condition's witness if it is not a valid structure.
CopulaPtr shuffle_copula(ShuffleStructure s);
// C composed with a coordinate permutation: evaluates inner at apply(pi, u).
CopulaPtr permuted_view(CopulaPtr inner, Perm pi);
// Lower-dimensional margin: dropped axes pinned to 1, kept axes (1-based) in
// the caller's order. Needs at least 2 kept axes.
CopulaPtr margin(CopulaPtr inner, const std::vector<int>& kept_axes);

// The distinguished point u* with coordinate sum d-1.
std::vector<Rat> u_star(int d);

Rat evaluate(const Copula& c, const UnitPoint& u);
// Signed C-volume of a box via corner inclusion-exclusion; >= 0 iff the term
// spreads nonnegative mass there.
Rat box_volume(const Copula& c, const HyperBox& b);

}  // namespace nonex
