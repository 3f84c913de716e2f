#include "agelab/interpolant.hpp"

#include <cmath>

#include <unsupported/Eigen/FFT>

namespace agelab {

PacketInterpolant::PacketInterpolant(const WavePacket& packet, int refinement)
    : omega_max_(packet.grid.omega_max) {
  if (refinement < 2) throw DomainError("PacketInterpolant: refinement must be >= 2");
  const Eigen::Index n = packet.grid.n_omega;
  const Eigen::Index m = n * refinement;
  fine_spacing_ = packet.grid.spacing() / refinement;

  Eigen::FFT<double> fft;
  Eigen::VectorXcd spectrum(n);
  {
    Eigen::VectorXcd input = packet.samples.matrix();
    fft.fwd(spectrum, input);
  }

  // zero-pad the two-sided spectrum; split the Nyquist bin symmetrically
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(m);
  const Eigen::Index half = n / 2;
  padded.head(half) = spectrum.head(half);
  padded.tail(half - 1) = spectrum.tail(half - 1);
  padded[half] = 0.5 * spectrum[half];
  padded[m - half] = 0.5 * spectrum[half];

  Eigen::VectorXcd fine(m);
  fft.inv(fine, padded);
  fine_ = fine.array() * double(refinement);
}

Complex PacketInterpolant::operator()(double omega) const {
  if (omega < 0.0 || omega > omega_max_) return Complex(0.0, 0.0);
  const Eigen::Index m = fine_.size();
  const double position = omega / fine_spacing_;
  Eigen::Index base = Eigen::Index(std::floor(position));
  const double frac = position - double(base);

  // 4-point cubic Lagrange around [base-1, base+2], periodic wrap in the tail
  const auto at = [&](Eigen::Index i) {
    return fine_[((i % m) + m) % m];
  };
  const Complex f0 = at(base - 1), f1 = at(base), f2 = at(base + 1), f3 = at(base + 2);
  const double t = frac;
  const double c0 = -t * (t - 1.0) * (t - 2.0) / 6.0;
  const double c1 = (t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0;
  const double c2 = -(t + 1.0) * t * (t - 2.0) / 2.0;
  const double c3 = (t + 1.0) * t * (t - 1.0) / 6.0;
  return c0 * f0 + c1 * f1 + c2 * f2 + c3 * f3;
}

}  // namespace agelab
