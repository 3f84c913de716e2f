#pragma once

#include <Eigen/Core>

#include "agelab/energy.hpp"

namespace agelab {

/// Band-limited interpolation of packet samples: the trigonometric
/// interpolant is refined onto a zero-padded grid once, then evaluated with a
/// local 4-point cubic. With the default refinement the cubic residual sits
/// far below the transform tolerances used elsewhere. Evaluations outside
/// [0, omega_max] return zero (the tail invariant certifies the packet is
/// negligible there).
class PacketInterpolant {
 public:
  explicit PacketInterpolant(const WavePacket& packet, int refinement = 16);

  Complex operator()(double omega) const;

  double fine_spacing() const { return fine_spacing_; }

 private:
  double omega_max_;
  double fine_spacing_;
  Eigen::ArrayXcd fine_;  // refined samples over one period of the interpolant
};

}  // namespace agelab
