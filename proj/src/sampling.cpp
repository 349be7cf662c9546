#include "sampling.hpp"

#include <algorithm>
#include <limits>

namespace nonex {

uint64_t RatSampler::below(uint64_t n) {
  if (n == 0) throw StepError("empty sampling range");
  uint64_t cutoff = (0 - n) % n;  // 2^64 mod n; above it the draw is unbiased
  for (;;) {
    uint64_t r = gen_();
    if (r >= cutoff) return r % n;
  }
}

Rat RatSampler::coord(int d) {
  uint64_t a = below(7);
  uint64_t den = (uint64_t{1} << a) * static_cast<uint64_t>(d + 1);
  Rat q(static_cast<unsigned long>(below(den + 1)), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

std::vector<Rat> RatSampler::point(int d) {
  std::vector<Rat> u;
  u.reserve(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k) u.push_back(coord(d));
  return u;
}

HyperBox RatSampler::box(int d) {
  std::vector<Rat> lo, hi;
  for (int k = 0; k < d; ++k) {
    Rat a = coord(d), b = coord(d);
    while (a == b) b = coord(d);
    if (b < a) std::swap(a, b);
    lo.push_back(a);
    hi.push_back(b);
  }
  return HyperBox(std::move(lo), std::move(hi));
}

Perm RatSampler::perm(int d) {
  std::vector<int> images(static_cast<size_t>(d));
  for (int k = 1; k <= d; ++k) images[static_cast<size_t>(k - 1)] = k;
  for (int k = d; k >= 2; --k) {
    uint64_t j = below(static_cast<uint64_t>(k));
    std::swap(images[static_cast<size_t>(k - 1)], images[static_cast<size_t>(j)]);
  }
  return Perm(std::move(images));
}

std::vector<Rat> RatSampler::delta_values(int d) {
  if (d < 2 || d % 2 != 0)
    throw UnsupportedDimError("delta parameters need even dimension >= 2");
  int n = d / 2;
  const int64_t cap = 360;  // 1/(d+1) in lattice units of 1/(360(d+1))
  int64_t rem = static_cast<int64_t>(n - 1) * cap;
  std::vector<int64_t> units;
  for (int i = 0; i < n - 1; ++i) {
    int64_t slots_after = n - 1 - i;
    int64_t lo = std::max<int64_t>(0, rem - slots_after * cap);
    int64_t hi = std::min<int64_t>(cap, rem);
    int64_t v = lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    units.push_back(v);
    rem -= v;
  }
  units.push_back(rem);
  std::sort(units.begin(), units.end());
  std::vector<Rat> out;
  unsigned long den = 360ul * static_cast<unsigned long>(d + 1);
  for (int64_t v : units) {
    Rat q(static_cast<unsigned long>(v), den);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace nonex
