#include "point.hpp"

namespace nonex {

UnitPoint::UnitPoint(std::vector<Rat> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw DimError("points need dimension >= 2");
  for (const Rat& c : coords_)
    if (c < 0 || c > 1)
      throw ParseError("coordinate outside [0,1]: " + rational_str(c));
}

UnitPoint UnitPoint::parse(const std::string& csv) {
  return UnitPoint(parse_rational_csv(csv));
}

HyperBox::HyperBox(std::vector<Rat> lo_, std::vector<Rat> hi_)
    : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size() || lo.size() < 2) throw DimError("malformed box");
  for (size_t k = 0; k < lo.size(); ++k) {
    if (lo[k] < 0 || hi[k] > 1 || lo[k] > hi[k])
      throw ParseError("box interval outside the unit cube on axis " +
                       std::to_string(k + 1));
  }
}

std::string HyperBox::str() const {
  std::string out;
  for (size_t k = 0; k < lo.size(); ++k) {
    if (k) out += 'x';
    out += '[' + rational_str(lo[k]) + ',' + rational_str(hi[k]) + ']';
  }
  return out;
}

}  // namespace nonex
