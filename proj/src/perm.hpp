// Permutations of {1,...,d} acting on points by coordinate relabeling:
// apply(pi, u)_k = u_{pi(k)}. Composition is defined through that action,
// compose(s, t) acts as "s first, then t".
#pragma once

#include <string>
#include <vector>

#include "point.hpp"

namespace nonex {

struct Transposition {
  int i, j;  // 1-based, canonicalized to i < j

  Transposition(int i_, int j_);
};

class Perm {
 public:
  explicit Perm(std::vector<int> images);  // images[k-1] = pi(k), 1-based values

  static Perm identity(int d);
  static Perm reversal(int d);  // pi(k) = d-k+1
  static Perm transposition(int d, const Transposition& t);

  int dim() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

std::vector<Rat> apply(const Perm& pi, std::span<const Rat> u);
UnitPoint apply(const Perm& pi, const UnitPoint& u);

Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& pi);

// At most d-1 transpositions whose left-to-right replay through the point
// action equals apply(pi, .); identity steps are omitted.
std::vector<Transposition> decompose(const Perm& pi);

std::vector<int> nonfixed_indices(const Perm& pi);  // sorted ascending, 1-based

// All d! permutations, ordered lexicographically by images.
std::vector<Perm> all_permutations(int d);

// "id", "reverse", or comma-separated images like "3,2,4,1".
Perm parse_perm(const std::string& text, int dim);
std::string perm_str(const Perm& pi);

}  // namespace nonex
