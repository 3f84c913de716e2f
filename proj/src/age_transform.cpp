#include "agelab/age_transform.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

#include "agelab/summation.hpp"

namespace agelab {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kWindowMassTolerance = 1e-12;

/// Per-slice forward transport: with nu_j = (j - N/2) dnu and
/// a_k = (k - N/2) da the Riemann sum of the e^{-i nu a} integral reduces to
/// a plain DFT conjugated by (-1)^j / (-1)^k sign flips (N is a multiple of
/// four, so the corner phase is +1).
void transport_column(Eigen::FFT<double>& fft, const Eigen::VectorXcd& in, double scale,
                      bool forward, Eigen::VectorXcd& out) {
  const Eigen::Index n = in.size();
  Eigen::VectorXcd buffer(n);
  for (Eigen::Index j = 0; j < n; ++j) buffer[j] = (j & 1) ? -in[j] : in[j];
  Eigen::VectorXcd transformed(n);
  if (forward) {
    fft.fwd(transformed, buffer);
  } else {
    fft.inv(transformed, buffer);
  }
  out.resize(n);
  for (Eigen::Index k = 0; k < n; ++k)
    out[k] = ((k & 1) ? -transformed[k] : transformed[k]) * scale;
}

double mass_of_rows(const AgeRepresentation& rep, Eigen::Index row_begin, Eigen::Index row_end) {
  CompensatedSum sum;
  for (const Eigen::MatrixXcd& b : rep.blocks())
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = row_begin; i < row_end; ++i) sum.add(std::norm(b(i, j)));
  return sum.value() * rep.grid().delta_a() * rep.grid().delta_sigma();
}

}  // namespace

AgeRepresentation AgeRepresentation::zero(const NuSigmaGrid& grid) {
  AgeRepresentation rep;
  rep.grid_ = grid;
  rep.blocks_.assign(std::size_t(grid.channel_pairs()),
                     Eigen::MatrixXcd::Zero(grid.n_nu, grid.n_sigma));
  return rep;
}

double AgeRepresentation::total_mass() const {
  return mass_of_rows(*this, 0, grid_.n_nu);
}

AgeRepresentation& AgeRepresentation::operator+=(const AgeRepresentation& other) {
  if (grid_ != other.grid_) throw GridMismatch("AgeRepresentation: grids differ");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] += other.blocks_[b];
  return *this;
}

AgeRepresentation& AgeRepresentation::operator-=(const AgeRepresentation& other) {
  if (grid_ != other.grid_) throw GridMismatch("AgeRepresentation: grids differ");
  for (std::size_t b = 0; b < blocks_.size(); ++b) blocks_[b] -= other.blocks_[b];
  return *this;
}

AgeRepresentation& AgeRepresentation::operator*=(Complex scale) {
  for (Eigen::MatrixXcd& b : blocks_) b *= scale;
  return *this;
}

AgeRepresentation to_age(const DensityKernel& rho) {
  require_nu_decay(rho, "to_age");
  const NuSigmaGrid& grid = rho.grid();
  AgeRepresentation rep = AgeRepresentation::zero(grid);
  const double scale = grid.delta_nu() / std::sqrt(kTwoPi);
  Eigen::FFT<double> fft;
  Eigen::VectorXcd column, transported;
  for (std::size_t b = 0; b < rho.blocks().size(); ++b) {
    for (Eigen::Index j = 0; j < grid.n_sigma; ++j) {
      column = rho.blocks()[b].col(j);
      transport_column(fft, column, scale, /*forward=*/true, transported);
      rep.blocks()[b].col(j) = transported;
    }
  }
  return rep;
}

DensityKernel from_age(const AgeRepresentation& rep) {
  const NuSigmaGrid& grid = rep.grid();
  DensityKernel rho = DensityKernel::zero(grid);
  // inverse of the forward scaling; Eigen's inv already divides by N
  const double scale = std::sqrt(kTwoPi) / grid.delta_nu();
  Eigen::FFT<double> fft;
  Eigen::VectorXcd column, transported;
  for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
    for (Eigen::Index j = 0; j < grid.n_sigma; ++j) {
      column = rep.blocks()[b].col(j);
      transport_column(fft, column, scale, /*forward=*/false, transported);
      rho.blocks()[b].col(j) = transported;
    }
  }
  return rho;
}

DensityKernel age_apply_continuous(const DensityKernel& rho) {
  AgeRepresentation rep = to_age(rho);
  const NuSigmaGrid& grid = rep.grid();
  // i d/dnu acts on this transport as multiplication by -a
  for (Eigen::MatrixXcd& b : rep.blocks())
    for (Eigen::Index k = 0; k < grid.n_nu; ++k) b.row(k) *= -grid.age(k);
  DensityKernel out = from_age(rep);
  out.set_hermitian(false);
  return out;
}

double commutator_residual(const DensityKernel& rho) {
  const double norm = rho.norm();
  if (norm == 0.0) throw ZeroState("commutator_residual: zero kernel");
  const DensityKernel al = age_apply_continuous(liouvillian_apply(rho));
  const DensityKernel la = liouvillian_apply(age_apply_continuous(rho));
  DensityKernel residual = al;
  residual -= la;
  residual -= Complex(0.0, 1.0) * rho;
  return residual.norm() / norm;
}

double wrapped_mass_fraction(const AgeRepresentation& rep, double t) {
  const double total = rep.total_mass();
  if (total == 0.0) return 0.0;
  const double da = rep.grid().delta_a();
  const Eigen::Index n = rep.grid().n_nu;
  const double bins_d = std::ceil(std::abs(t) / da);
  if (bins_d == 0.0) return 0.0;
  if (bins_d >= double(n)) return 1.0;
  const auto bins = Eigen::Index(bins_d);
  // t > 0 shifts content left: the lowest-a rows wrap; t < 0 the highest.
  const double wrapped = t > 0.0 ? mass_of_rows(rep, 0, bins) : mass_of_rows(rep, n - bins, n);
  return wrapped / total;
}

AgeRepresentation evolve_age(const AgeRepresentation& rep, double t) {
  if (t == 0.0) return rep;
  if (wrapped_mass_fraction(rep, t) > kWindowMassTolerance)
    throw WindowOverflow("evolve_age: shift by t = " + std::to_string(t) +
                         " wraps significant mass around the age window");
  const NuSigmaGrid& grid = rep.grid();
  const double da = grid.delta_a();
  const double steps = t / da;
  const double rounded = std::round(steps);
  if (rounded * da == t) {
    // exact grid shift: pure index move, no arithmetic on the samples
    const auto m = (Eigen::Index(std::fmod(rounded, double(grid.n_nu))) + grid.n_nu) % grid.n_nu;
    AgeRepresentation out = AgeRepresentation::zero(grid);
    for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
      for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
        const Eigen::Index source = (k + m) % grid.n_nu;
        out.blocks()[b].row(k) = rep.blocks()[b].row(source);
      }
    }
    return out;
  }
  // fractional shift: phase multiplier in the nu domain
  return to_age(evolve_nu(from_age(rep), t));
}

double pointwise_sup_after(const AgeRepresentation& rep, double t, const AgeWindow& window) {
  const NuSigmaGrid& grid = rep.grid();
  if (!(window.lo <= window.hi) || window.lo < grid.age(0) ||
      window.hi > grid.age(grid.n_nu - 1))
    throw WindowOverflow("pointwise_sup_after: window outside the age grid");
  const AgeRepresentation shifted = evolve_age(rep, t);
  double sup = 0.0;
  for (const Eigen::MatrixXcd& b : shifted.blocks()) {
    for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
      const double a = grid.age(k);
      if (a < window.lo || a > window.hi) continue;
      sup = std::max(sup, b.row(k).cwiseAbs().maxCoeff());
    }
  }
  return sup;
}

}  // namespace agelab
