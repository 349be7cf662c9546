#include "search.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <set>
#include <thread>

#include "sampling.hpp"

namespace nonex {

namespace {

constexpr long long kMaxGridNodes = 1LL << 31;

void check_step(int d, int m) {
  if (m < 1) throw StepError("grid step must be 1/m with integer m >= 1");
  if (m % (d + 1) != 0)
    throw StepError("grid step 1/" + std::to_string(m) +
                    ": m must be divisible by " + std::to_string(d + 1) +
                    " so the grid contains the attaining points");
}

struct Grid {
  int d = 0;
  int m = 0;
  long long n = 0;               // (m+1)^d
  std::vector<long long> pw;     // pw[k] = (m+1)^(d-1-k), axis 1 most significant
  std::vector<Rat> coords;       // coords[g] = g/m
  std::vector<double> fcoords;
  std::vector<Rat> vals;         // exact node values (exact mode)
  std::vector<double> fvals;     // double node values (float mode)

  std::vector<Rat> decode(long long idx) const {
    std::vector<Rat> u(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
      u[static_cast<size_t>(k)] = coords[static_cast<size_t>(idx / pw[static_cast<size_t>(k)])];
      idx %= pw[static_cast<size_t>(k)];
    }
    return u;
  }
};

// Runs fn(slot, lo, hi) over a partition of [0, n); slot indexes a
// preallocated result array. Results must not depend on the partition.
template <class Fn>
int run_chunks(long long n, int threads, Fn fn) {
  int t_max = static_cast<int>(std::min<long long>(n, 64));
  int T = std::clamp(threads, 1, std::max(1, t_max));
  long long chunk = (n + T - 1) / T;
  if (T == 1) {
    fn(0, 0, n);
    return 1;
  }
  std::vector<std::thread> ths;
  int slots = 0;
  for (int t = 0; t < T; ++t) {
    long long lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    ++slots;
    ths.emplace_back([=, &fn] { fn(t, lo, hi); });
  }
  for (auto& th : ths) th.join();
  return slots;
}

Grid build_grid(const Copula& c, int m, int threads, bool float_mode) {
  Grid g;
  g.d = c.dim();
  g.m = m;
  long long n = 1;
  for (int k = 0; k < g.d; ++k) {
    if (n > kMaxGridNodes / (m + 1))
      throw StepError("grid too large: (m+1)^d exceeds " +
                      std::to_string(kMaxGridNodes) + " nodes");
    n *= m + 1;
  }
  g.n = n;
  g.pw.assign(static_cast<size_t>(g.d), 1);
  for (int k = g.d - 2; k >= 0; --k)
    g.pw[static_cast<size_t>(k)] = g.pw[static_cast<size_t>(k + 1)] * (m + 1);
  for (int v = 0; v <= m; ++v) {
    Rat q(v, m);
    q.canonicalize();
    g.fcoords.push_back(q.get_d());
    g.coords.push_back(std::move(q));
  }

  if (float_mode)
    g.fvals.resize(static_cast<size_t>(n));
  else
    g.vals.resize(static_cast<size_t>(n));

  run_chunks(n, threads, [&](int, long long lo, long long hi) {
    std::vector<long long> digits(static_cast<size_t>(g.d));
    long long rem = lo;
    for (int k = 0; k < g.d; ++k) {
      digits[static_cast<size_t>(k)] = rem / g.pw[static_cast<size_t>(k)];
      rem %= g.pw[static_cast<size_t>(k)];
    }
    std::vector<Rat> u(static_cast<size_t>(g.d));
    std::vector<double> uf(static_cast<size_t>(g.d));
    for (long long i = lo; i < hi; ++i) {
      if (float_mode) {
        for (int k = 0; k < g.d; ++k)
          uf[static_cast<size_t>(k)] = g.fcoords[static_cast<size_t>(digits[static_cast<size_t>(k)])];
        g.fvals[static_cast<size_t>(i)] = c.eval_f(uf);
      } else {
        for (int k = 0; k < g.d; ++k)
          u[static_cast<size_t>(k)] = g.coords[static_cast<size_t>(digits[static_cast<size_t>(k)])];
        g.vals[static_cast<size_t>(i)] = c.eval(u);
      }
      int k = g.d - 1;
      while (k >= 0 && ++digits[static_cast<size_t>(k)] > m) {
        digits[static_cast<size_t>(k)] = 0;
        --k;
      }
    }
  });
  return g;
}

// Best difference in one scan: max value, ties to the smallest node index.
struct ChunkBest {
  bool set = false;
  Rat value;
  double fvalue = 0;
  long long idx = std::numeric_limits<long long>::max();
};

void merge_exact(ChunkBest& a, const ChunkBest& b) {
  if (!b.set) return;
  if (!a.set) {
    a = b;
    return;
  }
  int c = cmp(b.value, a.value);
  if (c > 0 || (c == 0 && b.idx < a.idx)) a = b;
}

void merge_float(ChunkBest& a, const ChunkBest& b) {
  if (!b.set) return;
  if (!a.set) {
    a = b;
    return;
  }
  if (b.fvalue > a.fvalue || (b.fvalue == a.fvalue && b.idx < a.idx)) a = b;
}

// src[k] = pi(k+1)-1: node index of the permuted point is
// sum_k digit[src[k]] * pw[k].
std::vector<size_t> perm_sources(const Perm& pi) {
  std::vector<size_t> src;
  for (int k = 1; k <= pi.dim(); ++k) src.push_back(static_cast<size_t>(pi(k) - 1));
  return src;
}

ChunkBest scan_perm(const Grid& g, const Perm& pi, int threads, bool float_mode) {
  std::vector<size_t> src = perm_sources(pi);
  std::vector<ChunkBest> bests(64);
  run_chunks(g.n, threads, [&](int slot, long long lo, long long hi) {
    ChunkBest best;
    std::vector<long long> digits(static_cast<size_t>(g.d));
    long long rem = lo;
    for (int k = 0; k < g.d; ++k) {
      digits[static_cast<size_t>(k)] = rem / g.pw[static_cast<size_t>(k)];
      rem %= g.pw[static_cast<size_t>(k)];
    }
    Rat diff;
    for (long long i = lo; i < hi; ++i) {
      long long fp = 0;
      for (int k = 0; k < g.d; ++k)
        fp += digits[src[static_cast<size_t>(k)]] * g.pw[static_cast<size_t>(k)];
      if (float_mode) {
        double dv = fp == i ? 0.0
                            : std::abs(g.fvals[static_cast<size_t>(i)] -
                                       g.fvals[static_cast<size_t>(fp)]);
        if (!best.set || dv > best.fvalue) {
          best.set = true;
          best.fvalue = dv;
          best.idx = i;
        }
      } else {
        if (fp == i) {
          if (!best.set) {
            best.set = true;
            best.value = 0;
            best.idx = i;
          }
        } else {
          diff = g.vals[static_cast<size_t>(i)] - g.vals[static_cast<size_t>(fp)];
          if (diff < 0) diff = -diff;
          if (!best.set || diff > best.value) {
            best.set = true;
            best.value = diff;
            best.idx = i;
          }
        }
      }
      int k = g.d - 1;
      while (k >= 0 && ++digits[static_cast<size_t>(k)] > g.m) {
        digits[static_cast<size_t>(k)] = 0;
        --k;
      }
    }
    bests[static_cast<size_t>(slot)] = std::move(best);
  });
  ChunkBest total;
  for (const ChunkBest& b : bests)
    if (float_mode)
      merge_float(total, b);
    else
      merge_exact(total, b);
  return total;
}

SearchReport report_from(const Grid& g, const Copula& c, const Perm& pi,
                         const ChunkBest& best, bool float_mode) {
  SearchReport r(pi);
  r.float_mode = float_mode;
  r.best_point = g.decode(best.idx);
  if (float_mode) {
    // The scan picked the winner in doubles; its value is re-derived exactly.
    std::vector<Rat> v = ::nonex::apply(pi, r.best_point);
    Rat diff = c.eval(r.best_point) - c.eval(v);
    if (diff < 0) diff = -diff;
    r.best_value = diff;
  } else {
    r.best_value = best.value;
  }
  Rat h(1, g.m);
  h.canonicalize();
  r.grid_step = h;
  Rat slack(g.d, g.m);
  slack.canonicalize();
  r.certified_upper = r.best_value + slack;
  r.gap = slack;
  r.evaluations = g.n;
  return r;
}

// Exhaustive permutation list for mu, keeping the lexicographically smaller
// of each inverse pair; or reversal + seeded random draws past the budget.
std::vector<Perm> mu_perms(int d, long long budget, uint64_t seed,
                           bool& exhaustive) {
  unsigned long long fact = 1;
  bool overflow = false;
  for (int i = 2; i <= d; ++i) {
    if (fact > ULLONG_MAX / static_cast<unsigned long long>(i)) {
      overflow = true;
      break;
    }
    fact *= static_cast<unsigned long long>(i);
  }
  if (!overflow && budget >= 0 &&
      fact <= static_cast<unsigned long long>(budget)) {
    exhaustive = true;
    std::vector<Perm> out;
    for (Perm& p : all_permutations(d))
      if (p.images() <= inverse(p).images()) out.push_back(std::move(p));
    return out;
  }
  exhaustive = false;
  std::vector<Perm> out;
  out.push_back(Perm::reversal(d));
  RatSampler rng(seed);
  for (long long i = 0; i < budget; ++i) out.push_back(rng.perm(d));
  return out;
}

}  // namespace

SearchReport max_difference(const Copula& c, const Perm& pi, int m, int threads,
                            bool float_mode) {
  if (pi.dim() != c.dim())
    throw DimError("permutation dimension " + std::to_string(pi.dim()) +
                   " does not match term dimension " + std::to_string(c.dim()));
  check_step(c.dim(), m);
  Grid g = build_grid(c, m, threads, float_mode);
  ChunkBest best = scan_perm(g, pi, threads, float_mode);
  return report_from(g, c, pi, best, float_mode);
}

MuReport mu_measure(const Copula& c, int m, long long perm_budget, uint64_t seed,
                    int threads, bool float_mode) {
  int d = c.dim();
  check_step(d, m);
  Grid g = build_grid(c, m, threads, float_mode);

  bool exhaustive = false;
  std::vector<Perm> perms = mu_perms(d, perm_budget, seed, exhaustive);

  const Perm* best_pi = nullptr;
  ChunkBest best;
  for (const Perm& pi : perms) {
    ChunkBest cand = scan_perm(g, pi, threads, float_mode);
    bool take = false;
    if (!best_pi) {
      take = true;
    } else if (float_mode) {
      if (cand.fvalue > best.fvalue ||
          (cand.fvalue == best.fvalue &&
           (cand.idx < best.idx ||
            (cand.idx == best.idx && pi.images() < best_pi->images()))))
        take = true;
    } else {
      int cv = cmp(cand.value, best.value);
      if (cv > 0 ||
          (cv == 0 && (cand.idx < best.idx ||
                       (cand.idx == best.idx && pi.images() < best_pi->images()))))
        take = true;
    }
    if (take) {
      best = cand;
      best_pi = &pi;
    }
  }

  MuReport out(report_from(g, c, *best_pi, best, float_mode));
  out.exhaustive = exhaustive;
  out.perms_scanned = static_cast<long long>(perms.size());
  Rat factor(d + 1, d - 1);
  factor.canonicalize();
  out.mu = factor * out.inner.best_value;
  out.mu_certified_upper = factor * out.inner.certified_upper;
  return out;
}

std::vector<std::vector<Rat>> sharp_attaining_points(const Copula& c, int m,
                                                     int threads) {
  int d = c.dim();
  if (d > 8)
    throw UnsupportedDimError(
        "exhaustive attainment enumeration is limited to dimension <= 8");
  check_step(d, m);
  Rat target = Rat(d - 1, d + 1);
  target.canonicalize();
  Grid g = build_grid(c, m, threads, /*float_mode=*/false);

  std::set<long long> hits;
  for (const Perm& pi : all_permutations(d)) {
    std::vector<size_t> src = perm_sources(pi);
    std::vector<std::set<long long>> chunk_hits(64);
    run_chunks(g.n, threads, [&](int slot, long long lo, long long hi) {
      std::vector<long long> digits(static_cast<size_t>(d));
      long long rem = lo;
      for (int k = 0; k < d; ++k) {
        digits[static_cast<size_t>(k)] = rem / g.pw[static_cast<size_t>(k)];
        rem %= g.pw[static_cast<size_t>(k)];
      }
      Rat diff;
      for (long long i = lo; i < hi; ++i) {
        long long fp = 0;
        for (int k = 0; k < d; ++k)
          fp += digits[src[static_cast<size_t>(k)]] * g.pw[static_cast<size_t>(k)];
        if (fp != i) {
          diff = g.vals[static_cast<size_t>(i)] - g.vals[static_cast<size_t>(fp)];
          if (diff < 0) diff = -diff;
          if (diff == target) chunk_hits[static_cast<size_t>(slot)].insert(i);
        }
        int k = d - 1;
        while (k >= 0 && ++digits[static_cast<size_t>(k)] > g.m) {
          digits[static_cast<size_t>(k)] = 0;
          --k;
        }
      }
    });
    for (const auto& ch : chunk_hits) hits.insert(ch.begin(), ch.end());
  }

  std::vector<std::vector<Rat>> out;
  for (long long i : hits) out.push_back(g.decode(i));
  return out;
}

ManifoldCheck is_in_manifold(const UnitPoint& u) {
  int d = u.dim();
  std::vector<Rat> v = u.coords();
  std::sort(v.begin(), v.end());
  if (d % 2 == 1) {
    ManifoldCheck r;
    r.in = v == u_star(d);
    return r;
  }
  int n = d / 2;
  Rat low(d - 1, d + 1), high(d, d + 1);
  low.canonicalize();
  high.canonicalize();
  ManifoldCheck r;
  for (int k = 0; k < n; ++k)
    if (v[static_cast<size_t>(k)] != low) return r;
  std::vector<Rat> delta;
  for (int j = n; j < d; ++j) delta.push_back(v[static_cast<size_t>(j)] - high);
  try {
    DeltaVector dv = DeltaVector::checked(d, std::move(delta));
    r.in = true;
    r.delta = std::move(dv);
  } catch (const ParseError&) {
    r.in = false;
  }
  return r;
}

std::vector<ManifoldPoint> sample_manifold(int d, int count, uint64_t seed) {
  if (d < 2) throw DimError("dimension must be >= 2, got " + std::to_string(d));
  std::vector<ManifoldPoint> out;
  if (d % 2 == 1) {
    out.push_back(ManifoldPoint{u_star(d), std::nullopt});
    return out;
  }
  if (d == 2) {
    DeltaVector dv = DeltaVector::checked(2, {Rat(0)});
    std::vector<Rat> u = manifold_point(dv);
    out.push_back(ManifoldPoint{std::move(u), std::move(dv)});
    return out;
  }
  RatSampler rng(seed);
  for (int i = 0; i < count; ++i) {
    DeltaVector dv = DeltaVector::checked(d, rng.delta_values(d));
    std::vector<Rat> u = manifold_point(dv);
    out.push_back(ManifoldPoint{std::move(u), std::move(dv)});
  }
  return out;
}

}  // namespace nonex
