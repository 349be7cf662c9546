// Shuffle-of-min structures: hypercube cells with per-axis intervals and a
// base mass distribution (diagonal or uniform), the four validity conditions,
// exact evaluation, and the two builders (the extremal structure cut by
// hyperplanes, and the even-d attaining family parameterized by delta).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "point.hpp"

namespace nonex {

enum class BaseTag { Min, Independence };

std::string base_str(BaseTag b);
BaseTag parse_base(const std::string& text);

struct ShuffleCell {
  std::vector<Rat> lo, hi;  // per-axis closed intervals, axis k at index k-1
  BaseTag base = BaseTag::Min;

  Rat mass() const { return hi[0] - lo[0]; }
};

struct ShuffleStructure {
  int dim = 0;
  std::vector<ShuffleCell> cells;
};

struct ValidationReport {
  bool finite_ok = false;      // finite nonempty cell list, consistent dims, intervals in [0,1]
  bool overlap_ok = false;     // per axis, interval intersections hold at most one point
  bool hypercube_ok = false;   // per cell, all d lengths equal
  bool partition_ok = false;   // per axis, lengths sum to 1
  std::string finite_witness, overlap_witness, hypercube_witness, partition_witness;

  bool ok() const { return finite_ok && overlap_ok && hypercube_ok && partition_ok; }
  // Witness string of the first failed condition; empty when everything holds.
  std::string first_failure() const;
};

ValidationReport validate(const ShuffleStructure& s);

Rat evaluate_shuffle(const ShuffleStructure& s, std::span<const Rat> u);
double evaluate_shuffle_f(const ShuffleStructure& s, std::span<const double> u);

// Delta parameters of the even-d attaining family: n = d/2 sorted rationals
// in [0, 1/(d+1)] summing to (n-1)/(d+1). For d = 2 the constraint forces
// delta = (0); an empty input is accepted as shorthand for it.
struct DeltaVector {
  int dim;                  // the even d, not n
  std::vector<Rat> values;  // sorted ascending, size d/2

  static DeltaVector checked(int d, std::vector<Rat> values);
};

// The d-cell structure realizing the sharp-bound copula: hyperplane cuts at
// the running sums of w_i = 1 - u*_i. Keeps its zero-mass cells so the cell
// count is exactly d.
ShuffleStructure extremal_shuffle_structure(int d);

// The even-d family attaining (d-1)/(d+1) at (u(delta), reverse) with the
// min base; 3n-1 cells per the four-case interval table, zero-mass cells
// dropped.
ShuffleStructure manifold_shuffle_structure(const DeltaVector& delta,
                                            BaseTag base = BaseTag::Min);

// Canonical point of the family: n copies of (d-1)/(d+1), then d/(d+1)+delta_j.
std::vector<Rat> manifold_point(const DeltaVector& delta);

// Structure files: JSON with dim, cells[{base, intervals[[lo,hi],...]}],
// rational strings only (no floating point), masses derived.
std::string shuffle_to_json(const ShuffleStructure& s);
ShuffleStructure shuffle_from_json(const std::string& text);
ShuffleStructure read_shuffle_file(const std::string& path);
void write_shuffle_file(const ShuffleStructure& s, const std::string& path);

}  // namespace nonex
