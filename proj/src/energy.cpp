#include "agelab/energy.hpp"

#include <cmath>

#include "agelab/summation.hpp"

namespace agelab {

namespace {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

void check_tail(const Eigen::ArrayXcd& samples, double threshold) {
  const Eigen::Index n = samples.size();
  const Eigen::Index tail_start = n - n / 10;
  for (Eigen::Index i = tail_start; i < n; ++i) {
    if (std::abs(samples[i]) > threshold)
      throw DecayViolation("packet tail exceeds the decay threshold at omega index " +
                           std::to_string(i));
  }
}

}  // namespace

EnergyGrid EnergyGrid::make(double omega_max, Eigen::Index n_omega, int channel_count,
                            double decay_threshold) {
  if (!(omega_max > 0.0)) throw DomainError("EnergyGrid: omega_max must be positive");
  if (n_omega < 16 || !is_power_of_two(n_omega))
    throw DomainError("EnergyGrid: n_omega must be a power of two >= 16");
  if (channel_count < 1) throw DomainError("EnergyGrid: channel_count must be positive");
  if (!(decay_threshold > 0.0)) throw DomainError("EnergyGrid: decay threshold must be positive");
  return EnergyGrid{omega_max, n_omega, channel_count, decay_threshold};
}

Eigen::ArrayXd EnergyGrid::points() const {
  return Eigen::ArrayXd::LinSpaced(n_omega, 0.0, omega_max);
}

Eigen::ArrayXd simpson_weights(Eigen::Index n, double h) {
  if (n < 3) throw DomainError("simpson_weights: need at least three samples");
  Eigen::ArrayXd w = Eigen::ArrayXd::Zero(n);
  const Eigen::Index intervals = n - 1;
  const Eigen::Index simpson_end = (intervals % 2 == 0) ? intervals : intervals - 1;
  for (Eigen::Index i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (simpson_end != intervals) {  // trapezoid on the odd last cell
    w[n - 2] += 0.5 * h;
    w[n - 1] += 0.5 * h;
  }
  return w;
}

double WavePacket::norm_squared() const {
  const Eigen::ArrayXd w = simpson_weights(grid.n_omega, grid.spacing());
  CompensatedSum sum;
  for (Eigen::Index i = 0; i < samples.size(); ++i) sum.add(w[i] * std::norm(samples[i]));
  return sum.value();
}

double WavePacket::norm() const { return std::sqrt(norm_squared()); }

WavePacket WavePacket::normalized() const {
  const double n = norm();
  if (n == 0.0) throw ZeroState("WavePacket::normalized: zero packet");
  WavePacket out = *this;
  out.samples /= n;
  return out;
}

Complex profile_value(const PacketProfile& profile, double omega) {
  Complex value(0.0, 0.0);
  for (const GaussianMonomial& c : profile) {
    const double d = (omega - c.center) / c.width;
    value += c.amplitude * std::pow(omega, c.power) * std::exp(-0.5 * d * d);
  }
  return value;
}

WavePacket make_packet(const PacketProfile& profile, const EnergyGrid& grid, int channel) {
  if (channel < 0 || channel >= grid.channel_count)
    throw DomainError("make_packet: channel out of range");
  for (const GaussianMonomial& c : profile) {
    if (c.power < 0.0) throw DomainError("make_packet: monomial power must be >= 0");
    if (!(c.width > 0.0)) throw DomainError("make_packet: gaussian width must be positive");
  }
  Eigen::ArrayXcd samples(grid.n_omega);
  for (Eigen::Index i = 0; i < grid.n_omega; ++i) samples[i] = profile_value(profile, grid.omega(i));
  check_tail(samples, grid.decay_threshold);
  return WavePacket{grid, channel, std::move(samples)};
}

WavePacket packet_from_samples(const EnergyGrid& grid, int channel, Eigen::ArrayXcd samples) {
  if (samples.size() != grid.n_omega)
    throw GridMismatch("packet_from_samples: sample count does not match the grid");
  if (channel < 0 || channel >= grid.channel_count)
    throw DomainError("packet_from_samples: channel out of range");
  check_tail(samples, grid.decay_threshold);
  return WavePacket{grid, channel, std::move(samples)};
}

WavePacket hamiltonian_apply(const WavePacket& psi) {
  WavePacket out = psi;
  out.samples *= psi.grid.points();
  return out;
}

Complex inner_product(const WavePacket& phi, const WavePacket& psi) {
  if (phi.grid != psi.grid) throw GridMismatch("inner_product: packets on different grids");
  if (phi.channel != psi.channel) return Complex(0.0, 0.0);
  const Eigen::ArrayXd w = simpson_weights(phi.grid.n_omega, phi.grid.spacing());
  CompensatedSum re, im;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    const Complex term = std::conj(phi.samples[i]) * psi.samples[i] * w[i];
    re.add(term.real());
    im.add(term.imag());
  }
  return Complex(re.value(), im.value());
}

Complex inner_product(std::span<const WavePacket> phi, std::span<const WavePacket> psi) {
  Complex value(0.0, 0.0);
  for (const WavePacket& p : phi)
    for (const WavePacket& q : psi)
      if (p.channel == q.channel) value += inner_product(p, q);
  return value;
}

}  // namespace agelab
