// Points of the unit cube and axis-aligned boxes, with validated rational
// coordinates.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "rational.hpp"

namespace nonex {

class UnitPoint {
 public:
  explicit UnitPoint(std::vector<Rat> coords);
  static UnitPoint parse(const std::string& csv);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Rat& operator[](int k) const { return coords_[static_cast<size_t>(k)]; }  // 0-based
  const std::vector<Rat>& coords() const { return coords_; }
  std::span<const Rat> span() const { return coords_; }

 private:
  std::vector<Rat> coords_;
};

struct HyperBox {
  std::vector<Rat> lo, hi;

  HyperBox(std::vector<Rat> lo_, std::vector<Rat> hi_);
  int dim() const { return static_cast<int>(lo.size()); }
  std::string str() const;  // "[a,b]x[c,d]x..."
};

}  // namespace nonex
