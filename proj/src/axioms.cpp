#include "axioms.hpp"

#include <algorithm>
#include <vector>

#include "bounds.hpp"
#include "sampling.hpp"

namespace nonex {

namespace {

std::string point_str(const std::vector<Rat>& u) {
  return "(" + csv_str(u) + ")";
}

}  // namespace

CheckResult check_grounded(const Copula& c, long long samples, uint64_t seed) {
  RatSampler rng(seed);
  int d = c.dim();
  CheckResult r;
  for (long long i = 0; i < samples; ++i) {
    std::vector<Rat> u = rng.point(d);
    u[rng.below(static_cast<uint64_t>(d))] = 0;
    for (int k = 0; k < d; ++k)  // occasionally zero more axes
      if (rng.below(4) == 0) u[static_cast<size_t>(k)] = 0;
    ++r.checked;
    Rat v = c.eval(u);
    if (v != 0) {
      r.pass = false;
      r.witness = "C" + point_str(u) + " = " + rational_str(v) + ", expected 0";
      return r;
    }
  }
  return r;
}

CheckResult check_uniform_margins(const Copula& c, long long samples, uint64_t seed) {
  RatSampler rng(seed);
  int d = c.dim();
  CheckResult r;
  for (long long i = 0; i < samples; ++i) {
    int axis = static_cast<int>(i % d);
    Rat t = rng.coord(d);
    std::vector<Rat> u(static_cast<size_t>(d), Rat(1));
    u[static_cast<size_t>(axis)] = t;
    ++r.checked;
    Rat v = c.eval(u);
    if (v != t) {
      r.pass = false;
      r.witness = "axis " + std::to_string(axis + 1) + ": C" + point_str(u) +
                  " = " + rational_str(v) + ", expected " + rational_str(t);
      return r;
    }
  }
  return r;
}

CheckResult check_d_increasing(const Copula& c, long long boxes, uint64_t seed) {
  int d = c.dim();
  CheckResult r;
  bool have_neg = false;
  Rat worst;
  std::string worst_box;

  auto consider = [&](const HyperBox& b) {
    ++r.checked;
    Rat v = box_volume(c, b);
    if (v < 0 && (!have_neg || v < worst)) {
      have_neg = true;
      worst = v;
      worst_box = b.str();
    }
  };

  if (d <= 4) {
    // Directed pass: every box with corners on {0, 1/(d+1), ..., 1}, in
    // lexicographic order of (lo, hi) per axis, axis 1 most significant.
    // C is tabulated on the lattice once; volumes are corner lookups.
    int nv = d + 2;
    std::vector<Rat> grid_vals;
    for (int a = 0; a <= d + 1; ++a) {
      Rat q(a, d + 1);
      q.canonicalize();
      grid_vals.push_back(q);
    }
    long long nnodes = 1;
    for (int k = 0; k < d; ++k) nnodes *= nv;
    std::vector<Rat> cache;
    cache.reserve(static_cast<size_t>(nnodes));
    {
      std::vector<int> digit(static_cast<size_t>(d), 0);
      std::vector<Rat> u(static_cast<size_t>(d));
      for (;;) {
        for (int k = 0; k < d; ++k)
          u[static_cast<size_t>(k)] = grid_vals[static_cast<size_t>(digit[static_cast<size_t>(k)])];
        cache.push_back(c.eval(u));
        int k = d - 1;
        while (k >= 0 && ++digit[static_cast<size_t>(k)] == nv) {
          digit[static_cast<size_t>(k)] = 0;
          --k;
        }
        if (k < 0) break;
      }
    }
    std::vector<long long> pw(static_cast<size_t>(d), 1);
    for (int k = d - 2; k >= 0; --k) pw[static_cast<size_t>(k)] = pw[static_cast<size_t>(k + 1)] * nv;

    std::vector<std::pair<int, int>> intervals;
    for (int a = 0; a <= d + 1; ++a)
      for (int b = a + 1; b <= d + 1; ++b) intervals.emplace_back(a, b);
    size_t np = intervals.size();
    std::vector<size_t> idx(static_cast<size_t>(d), 0);
    for (;;) {
      Rat v = 0;
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        long long flat = 0;
        int nlower = 0;
        for (int k = 0; k < d; ++k) {
          const auto& iv = intervals[idx[static_cast<size_t>(k)]];
          bool upper = (mask >> k) & 1u;
          if (!upper) ++nlower;
          flat += (upper ? iv.second : iv.first) * pw[static_cast<size_t>(k)];
        }
        if (nlower % 2 == 0)
          v += cache[static_cast<size_t>(flat)];
        else
          v -= cache[static_cast<size_t>(flat)];
      }
      ++r.checked;
      if (v < 0 && (!have_neg || v < worst)) {
        have_neg = true;
        worst = v;
        std::vector<Rat> lo, hi;
        for (int k = 0; k < d; ++k) {
          const auto& iv = intervals[idx[static_cast<size_t>(k)]];
          lo.push_back(grid_vals[static_cast<size_t>(iv.first)]);
          hi.push_back(grid_vals[static_cast<size_t>(iv.second)]);
        }
        worst_box = HyperBox(std::move(lo), std::move(hi)).str();
      }
      int k = d - 1;
      while (k >= 0 && ++idx[static_cast<size_t>(k)] == np) {
        idx[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }

  RatSampler rng(seed);
  for (long long i = 0; i < boxes; ++i) consider(rng.box(d));

  if (have_neg) {
    r.pass = false;
    r.witness = "box " + worst_box + " has volume " + rational_str(worst);
  }
  return r;
}

CheckResult check_lipschitz(const Copula& c, long long pairs, uint64_t seed) {
  RatSampler rng(seed);
  int d = c.dim();
  CheckResult r;
  for (long long i = 0; i < pairs; ++i) {
    std::vector<Rat> u = rng.point(d), v = rng.point(d);
    Rat dist = 0;
    for (int k = 0; k < d; ++k) dist += abs(u[static_cast<size_t>(k)] - v[static_cast<size_t>(k)]);
    ++r.checked;
    Rat gap = abs(c.eval(u) - c.eval(v));
    if (gap > dist) {
      r.pass = false;
      r.witness = "|C" + point_str(u) + " - C" + point_str(v) + "| = " +
                  rational_str(gap) + " exceeds coordinate distance " +
                  rational_str(dist);
      return r;
    }
  }
  return r;
}

AxiomReport verify_axioms(const Copula& c, long long samples, long long boxes,
                          uint64_t seed) {
  AxiomReport r;
  r.claims_copula = c.claims_copula();
  r.seed = seed;
  r.grounded = check_grounded(c, samples, seed);
  r.uniform_margins = check_uniform_margins(c, samples, seed + 1);
  r.d_increasing = check_d_increasing(c, boxes, seed + 2);
  r.lipschitz = check_lipschitz(c, samples, seed + 3);
  r.points_checked =
      r.grounded.checked + r.uniform_margins.checked + r.lipschitz.checked;
  r.boxes_checked = r.d_increasing.checked;
  return r;
}

namespace {

// All size-r subsets of {1..d} in lexicographic order, each sorted.
std::vector<std::vector<int>> subsets(int d, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int a = start; a <= d; ++a) {
      cur.push_back(a);
      self(self, a + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::string set_str(const std::vector<int>& s) {
  std::string x = "{";
  for (size_t i = 0; i < s.size(); ++i) x += (i ? "," : "") + std::to_string(s[i]);
  return x + "}";
}

}  // namespace

MarginAudit audit_margins(const Copula& c, int k, int m) {
  int d = c.dim();
  if (d <= 3)
    throw DimError("margin audit needs dimension > 3, got " + std::to_string(d));
  if (k < 1 || 2 * k >= d - 1)
    throw DimError("margin order k must satisfy 1 <= k < (d-1)/2, got " +
                   std::to_string(k));
  if (m < 1) throw StepError("grid step denominator must be >= 1");

  int dm = d - k;
  std::vector<std::vector<int>> kept = subsets(d, dm);

  // Tabulate each margin over the full grid once (kept axes aligned in
  // sorted order), then compare pairs pointwise.
  long long npoints = 1;
  for (int i = 0; i < dm; ++i) npoints *= m + 1;
  std::vector<std::vector<Rat>> table(kept.size());
  std::vector<Rat> grid_vals;
  for (int g = 0; g <= m; ++g) {
    Rat q(g, m);
    q.canonicalize();
    grid_vals.push_back(q);
  }
  std::vector<Rat> full(static_cast<size_t>(d));
  for (size_t s = 0; s < kept.size(); ++s) {
    table[s].reserve(static_cast<size_t>(npoints));
    std::vector<int> digit(static_cast<size_t>(dm), 0);
    for (;;) {
      std::fill(full.begin(), full.end(), Rat(1));
      for (int i = 0; i < dm; ++i)
        full[static_cast<size_t>(kept[s][static_cast<size_t>(i)] - 1)] =
            grid_vals[static_cast<size_t>(digit[static_cast<size_t>(i)])];
      table[s].push_back(c.eval(full));
      int i = dm - 1;
      while (i >= 0 && ++digit[static_cast<size_t>(i)] > m) {
        digit[static_cast<size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  MarginAudit a;
  a.dim = d;
  a.k = k;
  a.bound = sharp_bound(d);
  Rat nb(dm - 1, dm);
  nb.canonicalize();
  a.next_bound = nb;
  a.max_pair_difference = 0;
  for (size_t s = 0; s < kept.size(); ++s)
    for (size_t t = s + 1; t < kept.size(); ++t) {
      ++a.pairs;
      for (long long p = 0; p < npoints; ++p) {
        Rat diff = abs(table[s][static_cast<size_t>(p)] -
                       table[t][static_cast<size_t>(p)]);
        ++a.points_checked;
        if (diff > a.max_pair_difference) a.max_pair_difference = diff;
        if (diff > a.bound && a.witness.empty())
          a.witness = "margins " + set_str(kept[s]) + " vs " + set_str(kept[t]) +
                      " differ by " + rational_str(diff) + " at grid index " +
                      std::to_string(p);
      }
    }
  a.pass = a.witness.empty() && a.bound < a.next_bound;
  return a;
}

}  // namespace nonex
