#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "agelab/hardy_continuous.hpp"
#include "agelab/rng.hpp"
#include "agelab/summation.hpp"
#include "support/kernels.hpp"

using namespace agelab;
using namespace agelab::testing;

namespace {

/// Age representation with exact samples pi^-1/4 exp(-a^2/2): unit mass in
/// the continuum, and the tail sums below have the closed limit erfc(t)/2.
AgeRepresentation unit_age_gaussian(const NuSigmaGrid& grid) {
  AgeRepresentation rep = AgeRepresentation::zero(grid);
  const double amp = std::pow(std::numbers::pi, -0.25);
  for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
    const double a = grid.age(k);
    rep.block(0, 0)(k, 0) = amp * std::exp(-0.5 * a * a);
  }
  return rep;
}

/// Independent tail oracle: same-grid quadrature of the analytic profile
/// |rho_hat(a)|^2 = exp(-a^2)/sqrt(pi) over a > t (tends to erfc(t)/2 as the
/// grid refines). No transform or evolution machinery involved.
double analytic_tail(const NuSigmaGrid& grid, double t) {
  CompensatedSum sum;
  for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
    const double a = grid.age(k);
    if (a > t) sum.add(std::exp(-a * a) / std::sqrt(std::numbers::pi));
  }
  return sum.value() * grid.delta_a() * grid.delta_sigma();
}

/// Support strictly on a <= 0: a gaussian bump centered deep enough at -8
/// (width 0.8) that the cut at zero removes only ~1e-22 of amplitude, keeping
/// the nu side of the state inside the decay budget.
AgeRepresentation past_supported_rep(const NuSigmaGrid& grid) {
  AgeRepresentation rep = AgeRepresentation::zero(grid);
  for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
    const double a = grid.age(k);
    const double d = (a + 8.0) / 0.8;
    if (a <= 0.0) rep.block(0, 0)(k, 0) = std::exp(-0.5 * d * d);
  }
  return rep;
}

GaussianMonomial normalized_gaussian(double center, double width) {
  const double amplitude = std::pow(std::numbers::pi, -0.25) / std::sqrt(width);
  return {Complex(amplitude, 0.0), 0.0, center, width};
}

}  // namespace

TEST_CASE("psi_split: supports, reconstruction, symmetric state") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 1024);

  const AgeRepresentation past = past_supported_rep(grid);
  const PsiSplit past_split = psi_split(past);
  CHECK(past_split.plus.total_mass() == 0.0);
  for (std::size_t b = 0; b < past.blocks().size(); ++b)
    CHECK((past_split.minus.blocks()[b].array() == past.blocks()[b].array()).all());

  const AgeRepresentation even = unit_age_gaussian(grid);
  const PsiSplit even_split = psi_split(even);
  // exact reconstruction, disjoint supports
  AgeRepresentation rebuilt = even_split.plus;
  rebuilt += even_split.minus;
  for (std::size_t b = 0; b < even.blocks().size(); ++b)
    CHECK((rebuilt.blocks()[b].array() == even.blocks()[b].array()).all());

  // symmetric profile: halves match up to the a = 0 bin
  const double zero_bin =
      std::norm(even.block(0, 0)(grid.n_nu / 2, 0)) * grid.delta_a() * grid.delta_sigma();
  CHECK(std::abs(even_split.plus.total_mass() - (even_split.minus.total_mass() - zero_bin)) <
        1e-12);

  // mass additivity
  CHECK(std::abs(even_split.plus.total_mass() + even_split.minus.total_mass() -
                 even.total_mass()) < 1e-12 * even.total_mass());
}

TEST_CASE("plus_mass follows the analytic tail quadrature") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 2048);
  const DensityKernel state = from_age(unit_age_gaussian(grid));

  const AgeRepresentation initial = to_age(state);
  for (double requested : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const double t = snap_to_age_grid(grid, requested);
    const double measured = plus_mass(state, t);
    CHECK(std::abs(measured - analytic_tail(grid, t)) < 1e-6);

    // shift identity: evolution is a pure shift, so the plus mass equals
    // the initial representation's own tail beyond t
    CompensatedSum tail;
    for (Eigen::Index k = 0; k < grid.n_nu; ++k)
      if (grid.age(k) > t) tail.add(std::norm(initial.block(0, 0)(k, 0)));
    const double rep_tail = tail.value() * grid.delta_a() * grid.delta_sigma();
    CHECK(std::abs(measured - rep_tail) < 1e-10 * initial.total_mass());
  }
  // continuum limit sanity: the t = 1 tail is erfc(1)/2 up to one bin
  CHECK(std::abs(analytic_tail(grid, snap_to_age_grid(grid, 1.0)) - 0.5 * std::erfc(1.0)) < 0.05);

  // far future: everything has crossed to a <= 0
  const double total = to_age(state).total_mass();
  CHECK(plus_mass(state, snap_to_age_grid(grid, 12.0)) < 1e-8 * total);

  // a state already in the past subspace has no plus mass at all
  const DensityKernel past_state = from_age(past_supported_rep(grid));
  CHECK(plus_mass(past_state, 0.0) < 1e-20);

  CHECK_THROWS_AS(plus_mass(state, 250.0), WindowOverflow);
}

TEST_CASE("hardy_residual certifies half-line support") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 1024);
  const DensityKernel past_state = from_age(past_supported_rep(grid));
  CHECK(hardy_residual(past_state, HardySide::below) < 1e-20);

  const DensityKernel future_state = from_age(time_reverse(past_supported_rep(grid)));
  CHECK(hardy_residual(future_state, HardySide::above) < 1e-20);

  // evolved gaussian: by t = 12 the forbidden-side mass is far below 1e-8
  const DensityKernel state = from_age(unit_age_gaussian(grid));
  const DensityKernel late = evolve_nu(state, snap_to_age_grid(grid, 12.0));
  CHECK(hardy_residual(late, HardySide::below) < 1e-8);

  CHECK_THROWS_AS(hardy_residual(DensityKernel::zero(grid), HardySide::below), ZeroState);

  // the a = 0 bin belongs to neither forbidden half-line: the two residuals
  // and the zero-bin fraction partition the mass of an even state
  const AgeRepresentation even = unit_age_gaussian(grid);
  const DensityKernel even_state = from_age(even);
  const double total = even.total_mass();
  const double zero_bin =
      std::norm(even.block(0, 0)(grid.n_nu / 2, 0)) * grid.delta_a() * grid.delta_sigma();
  const double below = hardy_residual(even_state, HardySide::below);
  const double above = hardy_residual(even_state, HardySide::above);
  CHECK(zero_bin / total > 1e-3);  // the bin carries real mass on this grid
  CHECK(std::abs(below + above + zero_bin / total - 1.0) < 1e-10);
}

TEST_CASE("analytic_signal_check agrees with the support residual") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 1024);

  // an exact past-supported state reconstructs from its a <= 0 half alone
  const DensityKernel past_state = from_age(past_supported_rep(grid));
  CHECK(analytic_signal_check(past_state) < 1e-12);

  // an even profile loses half its mass: residual ~ sqrt(1/2)
  const DensityKernel even_state = from_age(unit_age_gaussian(grid));
  const double check = analytic_signal_check(even_state);
  CHECK(std::abs(check * check - hardy_residual(even_state, HardySide::below)) < 1e-8);
  CHECK(check == doctest::Approx(std::sqrt(0.5)).epsilon(0.05));

  // both routes measure the same forbidden-side fraction on random states
  SplitMix64 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityKernel rho = random_smooth_kernel(wedge_safe_grid(16.0, 512, 2), rng);
    const double a = analytic_signal_check(rho);
    const double h = hardy_residual(rho, HardySide::below);
    CHECK(std::abs(a * a - h) < 1e-8);
  }

  CHECK_THROWS_AS(analytic_signal_check(DensityKernel::zero(grid)), ZeroState);
}

TEST_CASE("time reversal is an exact antiunitary involution") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 512, 4);
  SplitMix64 rng(115);
  const AgeRepresentation rep = to_age(random_smooth_kernel(grid, rng));

  const AgeRepresentation twice = time_reverse(time_reverse(rep));
  for (std::size_t b = 0; b < rep.blocks().size(); ++b)
    CHECK((twice.blocks()[b].array() == rep.blocks()[b].array()).all());

  // norm preserved exactly: |conj(z)|^2 is built from the same doubles
  const AgeRepresentation reversed = time_reverse(rep);
  CHECK(exactly_equal(exact_bin_mass(rep, 0, grid.n_nu), exact_bin_mass(reversed, 0, grid.n_nu)));

  // mass swap: the plus bins of K rho are exactly the strict-minus bins of
  // rho (the a = 0 bin and the -a_max edge bin stay on the minus side)
  const Eigen::Index half = grid.n_nu / 2;
  CHECK(exactly_equal(exact_bin_mass(reversed, half + 1, grid.n_nu),
                      exact_bin_mass(rep, 1, half)));
}

TEST_CASE("theorem_sweep: tail oracle, monotonicity, conservation, certification") {
  const EnergyGrid energy = EnergyGrid::make(16.0, 1024);
  const NuSigmaGrid grid = NuSigmaGrid::make(16.0, 1024, 0.0, 16.0, 64);
  const WavePacket f = make_packet({normalized_gaussian(8.0, 0.5)}, energy);
  const DensityKernel state = build_kernel({{1.0, f, {}}}, grid);

  const AgeRepresentation initial = to_age(state);
  const double total = initial.total_mass();

  std::vector<double> schedule;
  for (int k = 0; k <= 8; ++k) schedule.push_back(double(k));
  const SweepTable table = theorem_sweep(state, schedule);
  REQUIRE(table.rows.size() == 9);

  double previous = total;
  for (const SweepRow& row : table.rows) {
    // independent tail: straight sum over the initial representation
    CompensatedSum tail;
    for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
      if (grid.age(k) <= row.t) continue;
      for (Eigen::Index j = 0; j < grid.n_sigma; ++j)
        tail.add(std::norm(initial.block(0, 0)(k, j)));
    }
    const double oracle = tail.value() * grid.delta_a() * grid.delta_sigma();
    CHECK(std::abs(row.plus_mass - oracle) < 1e-6 * total);

    CHECK(row.plus_mass <= previous + 1e-12 * total);
    previous = row.plus_mass;

    CHECK(std::abs(row.plus_mass + row.minus_mass - total) < 1e-10 * total);
    CHECK(row.hardy_residual == row.plus_mass / total);
  }
  CHECK(table.rows.back().plus_mass < 1e-8 * total);
  CHECK(table.rows.back().hardy_residual < 1e-8);

  // snapped times are what the table reports
  for (std::size_t i = 0; i < table.rows.size(); ++i)
    CHECK(table.rows[i].t == snap_to_age_grid(grid, schedule[i]));

  // a past-supported state never has plus mass
  const DensityKernel past_state = from_age(past_supported_rep(wedge_safe_grid(16.0, 1024)));
  const SweepTable past_table = theorem_sweep(past_state, {0.0, 1.0, 2.0});
  for (const SweepRow& row : past_table.rows) CHECK(row.plus_mass < 1e-20);

  // time reversal swaps the masses at t = 0 (up to the a = 0 bin)
  const DensityKernel reversed = from_age(time_reverse(initial));
  const SweepTable reversed_table = theorem_sweep(reversed, {0.0});
  const double zero_bin_mass = [&] {
    CompensatedSum bin;
    for (Eigen::Index j = 0; j < grid.n_sigma; ++j)
      bin.add(std::norm(initial.block(0, 0)(grid.n_nu / 2, j)));
    return bin.value() * grid.delta_a() * grid.delta_sigma();
  }();
  CHECK(std::abs(reversed_table.rows[0].plus_mass -
                 (table.rows[0].minus_mass - zero_bin_mass)) < 1e-10 * total);

  CHECK_THROWS_WITH_AS(theorem_sweep(state, {0.0, 150.0}), doctest::Contains("150"),
                       WindowOverflow);

  CHECK_THROWS_AS(theorem_sweep(state, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(theorem_sweep(DensityKernel::zero(grid), {0.0}), ZeroState);
}

TEST_CASE("sweep csv carries the documented header") {
  const NuSigmaGrid grid = wedge_safe_grid(16.0, 256);
  const DensityKernel state = from_age(unit_age_gaussian(grid));
  const SweepTable table = theorem_sweep(state, {0.0, 1.0});
  const std::string csv = sweep_csv(table);
  CHECK(csv.rfind("t,plus_mass,minus_mass,hardy_residual\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
