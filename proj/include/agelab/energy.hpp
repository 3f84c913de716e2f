#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "agelab/errors.hpp"

namespace agelab {

using Complex = std::complex<double>;

/// Uniform energy grid on [0, omega_max] with n_omega samples (a power of
/// two, endpoints included).
struct EnergyGrid {
  double omega_max = 0.0;
  Eigen::Index n_omega = 0;
  int channel_count = 1;
  double decay_threshold = 1e-12;

  static EnergyGrid make(double omega_max, Eigen::Index n_omega, int channel_count = 1,
                         double decay_threshold = 1e-12);

  double spacing() const { return omega_max / double(n_omega - 1); }
  double omega(Eigen::Index i) const { return double(i) * spacing(); }
  Eigen::ArrayXd points() const;

  friend bool operator==(const EnergyGrid&, const EnergyGrid&) = default;
};

/// Composite-Simpson weights for n uniformly spaced samples. A grid with an
/// odd interval count gets a trapezoid correction on the last cell, which
/// lives in the decay tail for every admissible packet.
Eigen::ArrayXd simpson_weights(Eigen::Index n, double h);

/// One gaussian-monomial profile component
///   amplitude * omega^power * exp(-(omega - center)^2 / (2 width^2)).
struct GaussianMonomial {
  Complex amplitude{1.0, 0.0};
  double power = 0.0;   // >= 0
  double center = 0.0;
  double width = 1.0;   // > 0
};

/// A packet profile is a superposition of gaussian-monomial components.
using PacketProfile = std::vector<GaussianMonomial>;

/// Sampled energy-space packet f(omega_i) in one channel.
struct WavePacket {
  EnergyGrid grid;
  int channel = 0;
  Eigen::ArrayXcd samples;

  double norm_squared() const;
  double norm() const;
  WavePacket normalized() const;

  friend bool operator==(const WavePacket& a, const WavePacket& b) {
    return a.grid == b.grid && a.channel == b.channel && a.samples.size() == b.samples.size() &&
           (a.samples == b.samples).all();
  }
};

/// Evaluate the profile analytically (used by packet construction and by the
/// interpolation tests as the exact reference).
Complex profile_value(const PacketProfile& profile, double omega);

/// Sample the profile on the grid. Throws DecayViolation when the magnitude
/// in the last 10% of the grid exceeds the grid's decay threshold, i.e. the
/// grid is too small for the requested packet.
WavePacket make_packet(const PacketProfile& profile, const EnergyGrid& grid, int channel = 0);

/// Wrap externally produced samples, enforcing the same tail invariant.
WavePacket packet_from_samples(const EnergyGrid& grid, int channel, Eigen::ArrayXcd samples);

/// H: pointwise multiplication by omega.
WavePacket hamiltonian_apply(const WavePacket& psi);

/// <phi|psi> with Simpson quadrature, antilinear in the left factor; packets
/// in different channels are exactly orthogonal. Throws GridMismatch.
Complex inner_product(const WavePacket& phi, const WavePacket& psi);

/// Multichannel states: one packet per channel, matched by channel index.
Complex inner_product(std::span<const WavePacket> phi, std::span<const WavePacket> psi);

}  // namespace agelab
