#pragma once

#include <map>

#include "agelab/bit_tape.hpp"
#include "agelab/rational.hpp"

namespace agelab {

/// A dynamical cylinder set: a finite set of constraints "at time coordinate
/// n the point sits in partition cell Delta_i" (i = 1 left half, i = 2 right
/// half). Coordinates are distinct by construction of the map.
class CylinderSpec {
 public:
  /// constraints: time coordinate -> cell index in {1, 2}; must be nonempty.
  explicit CylinderSpec(std::map<int, int> constraints);
  CylinderSpec(std::initializer_list<std::pair<const int, int>> constraints)
      : CylinderSpec(std::map<int, int>(constraints)) {}

  const std::map<int, int>& constraints() const { return constraints_; }

  int depth() const { return int(constraints_.size()); }

  /// All constraint coordinates shifted by k (the image under B^k).
  CylinderSpec shifted(int k) const;

  /// Exact membership of a tape point.
  bool contains(const BitTape& tape) const;

 private:
  std::map<int, int> constraints_;
};

/// Exact Lebesgue measure of the cylinder via the bit-coordinate
/// representation: each constraint pins one independent fair bit, so the
/// measure is exactly 2^-depth.
Rational measure_cylinder(const CylinderSpec& spec);

}  // namespace agelab
