#include "bounds.hpp"

#include <algorithm>

namespace nonex {

Rat transposition_bound(const UnitPoint& u, const Transposition& t) {
  if (t.j > u.dim())
    throw DimError("transposition index " + std::to_string(t.j) +
                   " outside dimension " + std::to_string(u.dim()));
  return abs(u[t.i - 1] - u[t.j - 1]);
}

Rat min_spread_bound(const UnitPoint& u) {
  Rat umin = u[0];
  Rat sum = 0;
  for (int k = 0; k < u.dim(); ++k) {
    if (u[k] < umin) umin = u[k];
    sum += u[k];
  }
  Rat spread = sum - u.dim() * umin;
  Rat slack = (u.dim() - 1) + umin - sum;
  Rat m = umin;
  if (spread < m) m = spread;
  if (slack < m) m = slack;
  return m;
}

namespace {

// Upper-half spread of a value multiset: sort ascending, sum v_i - v_1 over
// i = ceil(p/2)+1 .. p.
Rat upper_half_spread(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  int p = static_cast<int>(v.size());
  Rat s = 0;
  for (int i = (p + 1) / 2 + 1; i <= p; ++i) s += v[static_cast<size_t>(i - 1)] - v[0];
  return s;
}

}  // namespace

Rat half_spread_bound(const UnitPoint& u) {
  return upper_half_spread(u.coords());
}

Rat half_spread_bound(const UnitPoint& u, const Perm& pi) {
  if (pi.dim() != u.dim())
    throw DimError("permutation dimension " + std::to_string(pi.dim()) +
                   " does not match point dimension " + std::to_string(u.dim()));
  Rat full = half_spread_bound(u);
  std::vector<int> moved = nonfixed_indices(pi);
  if (moved.empty()) return Rat(0);  // identity: nothing moves
  std::vector<Rat> vals;
  for (int i : moved) vals.push_back(u[i - 1]);
  Rat refined = upper_half_spread(std::move(vals));
  return refined < full ? refined : full;
}

Rat frechet_gap(const UnitPoint& u) {
  Rat mn = u[0], sum = 0;
  for (int k = 0; k < u.dim(); ++k) {
    if (u[k] < mn) mn = u[k];
    sum += u[k];
  }
  Rat w = sum - (u.dim() - 1);
  if (w < 0) w = 0;
  return mn - w;
}

Rat sharp_bound(int d) {
  if (d < 2) throw DimError("dimension must be >= 2, got " + std::to_string(d));
  Rat b(d - 1, d + 1);
  b.canonicalize();
  return b;
}

namespace {

BoundReport combine(const UnitPoint& u, const std::optional<Rat>& transp,
                    const Rat& half) {
  BoundReport r;
  r.dim = u.dim();
  r.transposition_bound = transp;
  r.min_spread_bound = min_spread_bound(u);
  r.half_spread_bound = half;
  r.frechet_gap = frechet_gap(u);
  r.sharp_bound = sharp_bound(u.dim());
  r.combined = r.sharp_bound;
  if (transp && *transp < r.combined) r.combined = *transp;
  if (r.min_spread_bound < r.combined) r.combined = r.min_spread_bound;
  if (r.half_spread_bound < r.combined) r.combined = r.half_spread_bound;
  if (r.frechet_gap < r.combined) r.combined = r.frechet_gap;
  return r;
}

}  // namespace

BoundReport pointwise_bound(const UnitPoint& u) {
  return combine(u, std::nullopt, half_spread_bound(u));
}

BoundReport pointwise_bound(const UnitPoint& u, const Perm& pi) {
  if (pi.dim() != u.dim())
    throw DimError("permutation dimension " + std::to_string(pi.dim()) +
                   " does not match point dimension " + std::to_string(u.dim()));
  std::optional<Rat> transp;
  if (nonfixed_indices(pi).size() == 2) {
    std::vector<int> moved = nonfixed_indices(pi);
    transp = transposition_bound(u, Transposition(moved[0], moved[1]));
  }
  return combine(u, transp, half_spread_bound(u, pi));
}

}  // namespace nonex
