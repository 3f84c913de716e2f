#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "agelab/energy.hpp"
#include "agelab/interpolant.hpp"
#include "agelab/riesz.hpp"
#include "agelab/rng.hpp"

using namespace agelab;

namespace {

// L2-normalized gaussian profile: amplitude chosen so that
// integral |A exp(-(w-c)^2/(2W^2))|^2 dw = A^2 W sqrt(pi) = 1.
GaussianMonomial normalized_gaussian(double center, double width) {
  const double amplitude = std::pow(std::numbers::pi, -0.25) / std::sqrt(width);
  return {Complex(amplitude, 0.0), 0.0, center, width};
}

}  // namespace

TEST_CASE("energy grid validation") {
  CHECK_THROWS_AS(EnergyGrid::make(-1.0, 1024), DomainError);
  CHECK_THROWS_AS(EnergyGrid::make(10.0, 100), DomainError);  // not a power of two
  CHECK_THROWS_AS(EnergyGrid::make(10.0, 8), DomainError);    // too small
  const EnergyGrid grid = EnergyGrid::make(20.0, 1024);
  CHECK(grid.omega(0) == 0.0);
  CHECK(grid.omega(1023) == doctest::Approx(20.0));
}

TEST_CASE("simpson weights integrate smooth profiles to high order") {
  // even interval count: cubics are exact up to roundoff
  {
    const Eigen::Index n = 17;
    const double h = 1.0 / double(n - 1);
    const Eigen::ArrayXd w = simpson_weights(n, h);
    double integral = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = double(i) * h;
      integral += w[i] * x * x * x;
    }
    CHECK(integral == doctest::Approx(0.25).epsilon(1e-14));
  }
  // power-of-two count (odd interval count): trapezoid tail cell, still
  // integrates a constant exactly
  {
    const Eigen::Index n = 16;
    const double h = 2.0 / double(n - 1);
    const Eigen::ArrayXd w = simpson_weights(n, h);
    CHECK(w.sum() == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("make_packet: gaussian tail bound and decay enforcement") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 1024);
  const WavePacket psi = make_packet({normalized_gaussian(5.0, 1.0)}, grid);
  // closed-form tail bound: |f(18)| <= pi^-1/4 exp(-169/2) < 1e-15
  for (Eigen::Index i = grid.n_omega - grid.n_omega / 10; i < grid.n_omega; ++i)
    CHECK(std::abs(psi.samples[i]) < 1e-15);

  CHECK_THROWS_AS(make_packet({normalized_gaussian(0.95 * 20.0, 1.0)}, grid), DecayViolation);

  const WavePacket zero = make_packet({{Complex(0.0, 0.0), 0.0, 5.0, 1.0}}, grid);
  CHECK(zero.norm() == 0.0);

  CHECK_THROWS_AS(make_packet({{Complex(1.0, 0.0), -1.0, 5.0, 1.0}}, grid), DomainError);
}

TEST_CASE("packet_from_samples enforces the same invariants as make_packet") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 1024);
  Eigen::ArrayXcd samples = make_packet({normalized_gaussian(5.0, 1.0)}, grid).samples;
  const WavePacket wrapped = packet_from_samples(grid, 0, samples);
  CHECK(std::abs(wrapped.norm() - 1.0) < 1e-6);

  CHECK_THROWS_AS(packet_from_samples(grid, 0, Eigen::ArrayXcd::Zero(100)), GridMismatch);
  CHECK_THROWS_AS(packet_from_samples(grid, 3, samples), DomainError);
  samples[grid.n_omega - 1] = Complex(1.0, 0.0);
  CHECK_THROWS_AS(packet_from_samples(grid, 0, samples), DecayViolation);

  const WavePacket unit = wrapped.normalized();
  CHECK(std::abs(unit.norm() - 1.0) < 1e-12);
  const WavePacket zero = make_packet({{Complex(0.0, 0.0), 0.0, 5.0, 1.0}}, grid);
  CHECK_THROWS_AS(zero.normalized(), ZeroState);
}

TEST_CASE("hamiltonian is multiplication by omega") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 1024);
  WavePacket flat{grid, 0, Eigen::ArrayXcd::Ones(grid.n_omega)};
  const WavePacket h1 = hamiltonian_apply(flat);
  for (Eigen::Index i : {Eigen::Index(0), Eigen::Index(100), Eigen::Index(1023)})
    CHECK(h1.samples[i] == Complex(grid.omega(i), 0.0));

  const WavePacket h2 = hamiltonian_apply(h1);
  CHECK(std::abs(h2.samples[511] - Complex(grid.omega(511) * grid.omega(511), 0.0)) < 1e-12);
}

TEST_CASE("gaussian expectation value of H is the center energy") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 4096);
  const WavePacket psi = make_packet({normalized_gaussian(5.0, 1.0)}, grid);
  const Complex energy = inner_product(psi, hamiltonian_apply(psi));
  CHECK(std::abs(energy - Complex(5.0, 0.0)) < 1e-6);
}

TEST_CASE("inner product: normalization, channels, conjugate symmetry") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 4096, 2);
  const WavePacket psi = make_packet({normalized_gaussian(5.0, 1.0)}, grid, 0);
  CHECK(std::abs(inner_product(psi, psi) - Complex(1.0, 0.0)) < 1e-8);

  const WavePacket other = make_packet({normalized_gaussian(7.0, 1.0)}, grid, 1);
  CHECK(inner_product(psi, other) == Complex(0.0, 0.0));  // channel orthogonality

  const WavePacket phi = make_packet({{Complex(0.3, 0.4), 2.0, 6.0, 1.2}}, grid, 0);
  CHECK(inner_product(phi, psi) == std::conj(inner_product(psi, phi)));

  const EnergyGrid small = EnergyGrid::make(20.0, 1024);
  const WavePacket mismatched = make_packet({normalized_gaussian(5.0, 1.0)}, small);
  CHECK_THROWS_AS(inner_product(psi, mismatched), GridMismatch);

  // collection overload matches packets by channel
  const WavePacket psi1 = make_packet({normalized_gaussian(6.0, 1.0)}, grid, 1);
  std::vector<WavePacket> a{psi, psi1}, b{psi, psi1};
  const Complex both = inner_product(std::span<const WavePacket>(a),
                                     std::span<const WavePacket>(b));
  CHECK(std::abs(both - (inner_product(psi, psi) + inner_product(psi1, psi1))) < 1e-14);
}

TEST_CASE("riesz rotation and its inverse") {
  {
    auto [nu, sigma] = riesz_forward(3.0, 1.0);
    CHECK(nu == 2.0);
    CHECK(sigma == 2.0);
  }
  {
    auto [nu, sigma] = riesz_forward(4.5, 4.5);
    CHECK(nu == 0.0);
    CHECK(sigma == 4.5);
  }
  {
    auto [omega, omega_prime] = riesz_inverse(2.0, 2.0);
    CHECK(omega == 3.0);
    CHECK(omega_prime == 1.0);
  }
  {
    auto [omega, omega_prime] = riesz_inverse(0.0, 7.0);
    CHECK(omega == 7.0);
    CHECK(omega_prime == 7.0);
  }
  CHECK_THROWS_AS(riesz_forward(-1.0, 2.0), DomainError);
  CHECK_THROWS_AS(riesz_inverse(5.0, 1.0), DomainError);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const double omega = 20.0 * rng.next_double();
    const double omega_prime = 20.0 * rng.next_double();
    auto [nu, sigma] = riesz_forward(omega, omega_prime);
    CHECK(std::abs(nu) / 2.0 <= sigma);
    auto [back, back_prime] = riesz_inverse(nu, sigma);
    CHECK(std::abs(back - omega) < 1e-13);
    CHECK(std::abs(back_prime - omega_prime) < 1e-13);
  }
}

TEST_CASE("band-limited interpolation reproduces the analytic profile") {
  const EnergyGrid grid = EnergyGrid::make(20.0, 1024);
  const PacketProfile profile{normalized_gaussian(8.0, 0.7)};
  const WavePacket psi = make_packet(profile, grid);
  const PacketInterpolant interp(psi);

  SplitMix64 rng(12345);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double omega = 2.0 + 14.0 * rng.next_double();
    worst = std::max(worst, std::abs(interp(omega) - profile_value(profile, omega)));
  }
  CHECK(worst < 1e-12);

  // exact at the original samples (up to transform roundoff)
  for (Eigen::Index i : {Eigen::Index(100), Eigen::Index(512)})
    CHECK(std::abs(interp(grid.omega(i)) - psi.samples[i]) < 1e-13);

  // outside the grid the packet is certified negligible: interpolant says 0
  CHECK(interp(-0.5) == Complex(0.0, 0.0));
  CHECK(interp(20.5) == Complex(0.0, 0.0));
}
