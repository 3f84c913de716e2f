#include "agelab/kernel.hpp"

#include <cmath>
#include <cstdio>

#include "agelab/interpolant.hpp"
#include "agelab/summation.hpp"

namespace agelab {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

NuSigmaGrid NuSigmaGrid::make(double nu_max, Eigen::Index n_nu, double sigma_min,
                              double sigma_max, Eigen::Index n_sigma, int channel_count,
                              double decay_threshold) {
  if (!(nu_max > 0.0)) throw DomainError("NuSigmaGrid: nu_max must be positive");
  if (n_nu < 16 || !is_power_of_two(n_nu))
    throw DomainError("NuSigmaGrid: n_nu must be a power of two >= 16");
  if (sigma_min < 0.0 || !(sigma_max > sigma_min))
    throw DomainError("NuSigmaGrid: need 0 <= sigma_min < sigma_max");
  if (n_sigma < 1) throw DomainError("NuSigmaGrid: n_sigma must be positive");
  if (channel_count < 1) throw DomainError("NuSigmaGrid: channel_count must be positive");
  if (!(decay_threshold > 0.0)) throw DomainError("NuSigmaGrid: decay threshold must be positive");
  return NuSigmaGrid{nu_max, n_nu, sigma_min, sigma_max, n_sigma, channel_count, decay_threshold};
}

DensityKernel DensityKernel::zero(const NuSigmaGrid& grid, bool hermitian) {
  DensityKernel k;
  k.grid_ = grid;
  k.blocks_.assign(std::size_t(grid.channel_pairs()),
                   Eigen::MatrixXcd::Zero(grid.n_nu, grid.n_sigma));
  k.hermitian_ = hermitian;
  return k;
}

double DensityKernel::norm_squared() const {
  CompensatedSum sum;
  for (const Eigen::MatrixXcd& b : blocks_)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = 0; i < b.rows(); ++i) sum.add(std::norm(b(i, j)));
  return sum.value() * grid_.delta_nu() * grid_.delta_sigma();
}

double DensityKernel::norm() const { return std::sqrt(norm_squared()); }

DensityKernel& DensityKernel::operator+=(const DensityKernel& other) {
  if (grid_ != other.grid_) throw GridMismatch("DensityKernel: grids differ");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += other.blocks_[b];
  hermitian_ = hermitian_ && other.hermitian_;
  return *this;
}

DensityKernel& DensityKernel::operator-=(const DensityKernel& other) {
  if (grid_ != other.grid_) throw GridMismatch("DensityKernel: grids differ");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= other.blocks_[b];
  hermitian_ = hermitian_ && other.hermitian_;
  return *this;
}

DensityKernel& DensityKernel::operator*=(Complex scale) {
  for (Eigen::MatrixXcd& b : blocks_) b *= scale;
  if (scale.imag() != 0.0) hermitian_ = false;
  return *this;
}

DensityKernel build_kernel(const std::vector<KernelComponent>& components,
                           const NuSigmaGrid& grid) {
  bool all_pure = true;
  for (const KernelComponent& c : components) {
    if (c.weight < 0.0) throw DomainError("build_kernel: weights must be nonnegative");
    if (c.g && !(c.g->grid == c.f.grid))
      throw GridMismatch("build_kernel: component packets on different energy grids");
    if (c.g && !(*c.g == c.f)) all_pure = false;
    if (c.f.channel < 0 || c.f.channel >= grid.channel_count ||
        (c.g && (c.g->channel < 0 || c.g->channel >= grid.channel_count)))
      throw DomainError("build_kernel: packet channel outside the kernel grid");
  }

  DensityKernel kernel = DensityKernel::zero(grid, /*hermitian=*/all_pure);
  for (const KernelComponent& c : components) {
    const WavePacket& f = c.f;
    const WavePacket& g = c.g ? *c.g : c.f;
    const PacketInterpolant fi(f);
    const PacketInterpolant gi(g);
    Eigen::MatrixXcd& target = kernel.block(f.channel, g.channel);
    for (Eigen::Index j = 0; j < grid.n_sigma; ++j) {
      const double sigma = grid.sigma(j);
      for (Eigen::Index i = 0; i < grid.n_nu; ++i) {
        if (!grid.in_wedge(i, j)) continue;
        const double nu = grid.nu(i);
        target(i, j) += c.weight * fi(sigma + 0.5 * nu) * std::conj(gi(sigma - 0.5 * nu));
      }
    }
  }
  return kernel;
}

DensityKernel liouvillian_apply(const DensityKernel& rho) {
  DensityKernel out = rho;
  out.set_hermitian(false);  // nu rho is anti-hermitian in the pairing
  for (Eigen::MatrixXcd& b : out.blocks())
    for (Eigen::Index i = 0; i < b.rows(); ++i) b.row(i) *= rho.grid().nu(i);
  return out;
}

DensityKernel evolve_nu(const DensityKernel& rho, double t) {
  DensityKernel out = rho;
  const Eigen::Index n = rho.grid().n_nu;
  // phase table built conjugate-symmetric under nu -> -nu, so the hermitian
  // pairing survives bit for bit
  Eigen::VectorXcd phase(n);
  for (Eigen::Index i = 0; i <= n / 2; ++i) {
    const double angle = -rho.grid().nu(i) * t;
    phase[i] = Complex(std::cos(angle), std::sin(angle));
    if (i != 0) phase[n - i] = std::conj(phase[i]);
  }
  for (Eigen::MatrixXcd& b : out.blocks())
    for (Eigen::Index i = 0; i < n; ++i) b.row(i) *= phase[i];
  return out;
}

double hermitian_residual(const DensityKernel& rho) {
  const NuSigmaGrid& grid = rho.grid();
  double worst = 0.0;
  for (int n = 0; n < grid.channel_count; ++n) {
    for (int np = 0; np < grid.channel_count; ++np) {
      const Eigen::MatrixXcd& fwd = rho.block(n, np);
      const Eigen::MatrixXcd& swapped = rho.block(np, n);
      for (Eigen::Index j = 0; j < grid.n_sigma; ++j)
        for (Eigen::Index i = 0; i < grid.n_nu; ++i)
          worst = std::max(worst,
                           std::abs(fwd(i, j) - std::conj(swapped(grid.mirror(i), j))));
    }
  }
  return worst;
}

Complex kernel_trace(const DensityKernel& rho) {
  const NuSigmaGrid& grid = rho.grid();
  const Eigen::Index zero_row = grid.n_nu / 2;
  CompensatedSum re, im;
  for (int n = 0; n < grid.channel_count; ++n) {
    const Eigen::MatrixXcd& b = rho.block(n, n);
    for (Eigen::Index j = 0; j < grid.n_sigma; ++j) {
      re.add(b(zero_row, j).real());
      im.add(b(zero_row, j).imag());
    }
  }
  const double ds = grid.delta_sigma();
  return Complex(re.value() * ds, im.value() * ds);
}

double nu_tail_magnitude(const DensityKernel& rho) {
  const Eigen::Index n = rho.grid().n_nu;
  const Eigen::Index band = std::max<Eigen::Index>(1, n / 20);
  double worst = 0.0;
  for (const Eigen::MatrixXcd& b : rho.blocks()) {
    worst = std::max(worst, b.topRows(band).cwiseAbs().maxCoeff());
    worst = std::max(worst, b.bottomRows(band).cwiseAbs().maxCoeff());
  }
  return worst;
}

void require_nu_decay(const DensityKernel& rho, const char* where) {
  const double tail = nu_tail_magnitude(rho);
  if (tail > rho.grid().decay_threshold) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", tail);
    throw DecayViolation(std::string(where) + ": nu tail magnitude " + buf +
                         " exceeds the decay threshold");
  }
}

}  // namespace agelab
