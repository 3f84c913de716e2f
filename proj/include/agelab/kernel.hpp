#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "agelab/energy.hpp"

namespace agelab {

/// Rectangular (nu, sigma) grid for density-matrix kernels in the rotated
/// energy coordinates. nu is the FFT-friendly symmetric grid
/// nu_i = (i - n_nu/2) * delta_nu on [-nu_max, nu_max), sigma a plain uniform
/// slice label on [sigma_min, sigma_max]. Samples outside the physical wedge
/// sigma >= |nu|/2 are identically zero; every spectral operation acts per
/// sigma slice along the nu line.
struct NuSigmaGrid {
  double nu_max = 0.0;
  Eigen::Index n_nu = 0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  Eigen::Index n_sigma = 0;
  int channel_count = 1;
  double decay_threshold = 1e-12;

  static NuSigmaGrid make(double nu_max, Eigen::Index n_nu, double sigma_min, double sigma_max,
                          Eigen::Index n_sigma, int channel_count = 1,
                          double decay_threshold = 1e-12);

  double delta_nu() const { return 2.0 * nu_max / double(n_nu); }
  double nu(Eigen::Index i) const { return double(i - n_nu / 2) * delta_nu(); }
  double delta_sigma() const {
    return n_sigma > 1 ? (sigma_max - sigma_min) / double(n_sigma - 1) : 1.0;
  }
  double sigma(Eigen::Index j) const { return sigma_min + double(j) * delta_sigma(); }

  /// Dual age grid: a_k = (k - n_nu/2) * delta_a with delta_a = pi / nu_max.
  double delta_a() const { return 2.0 * 3.14159265358979323846 / (double(n_nu) * delta_nu()); }
  double age(Eigen::Index k) const { return double(k - n_nu / 2) * delta_a(); }

  bool in_wedge(Eigen::Index i, Eigen::Index j) const {
    return sigma(j) >= std::abs(nu(i)) / 2.0;
  }

  /// Index of -nu_i on the periodic grid (the i = 0 edge is its own alias).
  Eigen::Index mirror(Eigen::Index i) const { return i == 0 ? 0 : n_nu - i; }

  int channel_pairs() const { return channel_count * channel_count; }
  int block_index(int n, int n_prime) const { return n * channel_count + n_prime; }

  friend bool operator==(const NuSigmaGrid&, const NuSigmaGrid&) = default;
};

/// Sampled kernel rho(nu_i, sigma_j, n, n') stored as one n_nu x n_sigma
/// matrix per channel pair. hermitian means rho(nu,s,n,n') = conj(rho(-nu,s,n',n)).
class DensityKernel {
 public:
  DensityKernel() = default;
  static DensityKernel zero(const NuSigmaGrid& grid, bool hermitian = false);

  const NuSigmaGrid& grid() const { return grid_; }
  bool hermitian() const { return hermitian_; }
  void set_hermitian(bool h) { hermitian_ = h; }

  Eigen::MatrixXcd& block(int n, int n_prime) { return blocks_[grid_.block_index(n, n_prime)]; }
  const Eigen::MatrixXcd& block(int n, int n_prime) const {
    return blocks_[grid_.block_index(n, n_prime)];
  }
  std::vector<Eigen::MatrixXcd>& blocks() { return blocks_; }
  const std::vector<Eigen::MatrixXcd>& blocks() const { return blocks_; }

  /// Squared norm with the grid weights delta_nu * delta_sigma.
  double norm_squared() const;
  double norm() const;

  DensityKernel& operator+=(const DensityKernel& other);
  DensityKernel& operator-=(const DensityKernel& other);
  DensityKernel& operator*=(Complex scale);
  friend DensityKernel operator+(DensityKernel a, const DensityKernel& b) { return a += b; }
  friend DensityKernel operator-(DensityKernel a, const DensityKernel& b) { return a -= b; }
  friend DensityKernel operator*(Complex s, DensityKernel a) { return a *= s; }

 private:
  NuSigmaGrid grid_;
  std::vector<Eigen::MatrixXcd> blocks_;
  bool hermitian_ = false;
};

/// One w |f><g| contribution to a mixed-state kernel. g defaults to f, which
/// marks the component as pure (and the kernel as hermitian).
struct KernelComponent {
  double weight = 1.0;
  WavePacket f;
  std::optional<WavePacket> g;  // absent: g == f
};

/// rho(nu, sigma, n, n') = sum_k w_k f_k(sigma + nu/2) conj(g_k(sigma - nu/2))
/// inside the wedge, zero outside, with band-limited interpolation of the
/// packet samples. Throws GridMismatch when packets disagree on the energy
/// grid and DomainError on negative weights.
DensityKernel build_kernel(const std::vector<KernelComponent>& components,
                           const NuSigmaGrid& grid);

/// Liouvillian: pointwise multiplication by nu.
DensityKernel liouvillian_apply(const DensityKernel& rho);

/// Evolution exp(-i L t): pointwise multiplication by e^{-i nu t}. Preserves
/// the norm and the hermitian pairing exactly.
DensityKernel evolve_nu(const DensityKernel& rho, double t);

/// max |rho(nu,s,n,n') - conj(rho(-nu,s,n',n))| over the grid (edge bin
/// compared against its own conjugate).
double hermitian_residual(const DensityKernel& rho);

/// sum_sigma rho(0, sigma, n, n) * delta_sigma summed over channels: the
/// trace of the represented density matrix.
Complex kernel_trace(const DensityKernel& rho);

/// Largest |sample| in the first and last nu rows of any block, used to
/// enforce the decay precondition of the spectral operations.
double nu_tail_magnitude(const DensityKernel& rho);

/// Throws DecayViolation when the nu tails exceed the grid threshold.
void require_nu_decay(const DensityKernel& rho, const char* where);

}  // namespace agelab
