#pragma once

#include <cmath>
#include <utility>

#include "agelab/errors.hpp"

namespace agelab {

/// Rotated energy coordinates nu = omega - omega', sigma = (omega + omega')/2.
/// The image of the quarter plane is the wedge |nu|/2 <= sigma.
inline std::pair<double, double> riesz_forward(double omega, double omega_prime) {
  if (omega < 0.0 || omega_prime < 0.0)
    throw DomainError("riesz_forward: energies must be nonnegative");
  return {omega - omega_prime, 0.5 * (omega + omega_prime)};
}

/// Inverse rotation; throws DomainError outside the physical wedge.
inline std::pair<double, double> riesz_inverse(double nu, double sigma) {
  if (std::abs(nu) / 2.0 > sigma)
    throw DomainError("riesz_inverse: point outside the wedge |nu|/2 <= sigma");
  return {sigma + 0.5 * nu, sigma - 0.5 * nu};
}

}  // namespace agelab
