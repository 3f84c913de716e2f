#pragma once

#include <vector>

#include <Eigen/Core>

#include "agelab/kernel.hpp"

namespace agelab {

/// Fourier transport of a kernel's nu dependence into the age variable,
/// per (sigma, n, n') slice:
///
///   rho_hat(a) = (2 pi)^{-1/2}  integral  rho(nu) e^{-i nu a}  d nu.
///
/// Under this kernel the evolution e^{-i L t} acts as the pure left shift
/// rho_hat(a) -> rho_hat(a + t), and support on a <= 0 corresponds to
/// analytic continuation into the lower half nu plane (Hardy from below).
/// Samples live on a_k = (k - n_nu/2) * delta_a, delta_a = pi / nu_max.
class AgeRepresentation {
 public:
  AgeRepresentation() = default;
  static AgeRepresentation zero(const NuSigmaGrid& grid);

  const NuSigmaGrid& grid() const { return grid_; }

  Eigen::MatrixXcd& block(int n, int n_prime) { return blocks_[grid_.block_index(n, n_prime)]; }
  const Eigen::MatrixXcd& block(int n, int n_prime) const {
    return blocks_[grid_.block_index(n, n_prime)];
  }
  std::vector<Eigen::MatrixXcd>& blocks() { return blocks_; }
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }

  /// Mass = squared norm with weights delta_a * delta_sigma.
  double total_mass() const;

  AgeRepresentation& operator+=(const AgeRepresentation& other);
  AgeRepresentation& operator-=(const AgeRepresentation& other);
  AgeRepresentation& operator*=(Complex scale);
  friend AgeRepresentation operator+(AgeRepresentation a, const AgeRepresentation& b) {
    return a += b;
  }
  friend AgeRepresentation operator-(AgeRepresentation a, const AgeRepresentation& b) {
    return a -= b;
  }

 private:
  NuSigmaGrid grid_;
  std::vector<Eigen::MatrixXcd> blocks_;

  friend AgeRepresentation to_age(const DensityKernel&);
  friend DensityKernel from_age(const AgeRepresentation&);
};

/// Discrete unitary realization of the transport above. Requires the nu
/// tails below the grid's decay threshold (DecayViolation otherwise).
AgeRepresentation to_age(const DensityKernel& rho);

/// Exact inverse of to_age.
DensityKernel from_age(const AgeRepresentation& rep);

/// Age operator A = i d/dnu at fixed (sigma, n, n'), realized spectrally:
/// transport, multiply by the symbol -a, transport back.
DensityKernel age_apply_continuous(const DensityKernel& rho);

/// ||(A L - L A) rho - i rho|| / ||rho|| with this module's A and L. Small
/// for well-resolved kernels; ZeroState on rho = 0.
double commutator_residual(const DensityKernel& rho);

/// Shift rho_hat(a) -> rho_hat(a + t). When t is an integer multiple of
/// delta_a (bitwise: t == m * delta_a) the shift is an exact index move;
/// otherwise it is applied as the phase multiplier in the nu domain. Throws
/// WindowOverflow when more than a 1e-12 mass fraction would wrap around the
/// periodic age window.
AgeRepresentation evolve_age(const AgeRepresentation& rep, double t);

/// Closed a-interval used by the pointwise-decay diagnostic.
struct AgeWindow {
  double lo;
  double hi;
};

/// sup over the window (and all slices) of |rho_hat(a + t)|.
double pointwise_sup_after(const AgeRepresentation& rep, double t, const AgeWindow& window);

/// Mass fraction that a shift by t would push around the periodic window.
double wrapped_mass_fraction(const AgeRepresentation& rep, double t);

}  // namespace agelab
