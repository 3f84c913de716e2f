#include "agelab/cylinder.hpp"

namespace agelab {

CylinderSpec::CylinderSpec(std::map<int, int> constraints)
    : constraints_(std::move(constraints)) {
  if (constraints_.empty()) throw DomainError("CylinderSpec: at least one constraint required");
  for (const auto& [n, cell] : constraints_) {
    if (cell != 1 && cell != 2)
      throw DomainError("CylinderSpec: cell index must be 1 or 2 at coordinate " +
                        std::to_string(n));
  }
}

CylinderSpec CylinderSpec::shifted(int k) const {
  std::map<int, int> moved;
  for (const auto& [n, cell] : constraints_) moved.emplace(n + k, cell);
  return CylinderSpec(std::move(moved));
}

bool CylinderSpec::contains(const BitTape& tape) const {
  for (const auto& [n, cell] : constraints_) {
    if (tape.bit_at_time(n) != cell - 1) return false;
  }
  return true;
}

Rational measure_cylinder(const CylinderSpec& spec) {
  return Rational::dyadic_unit(spec.depth());
}

}  // namespace agelab
