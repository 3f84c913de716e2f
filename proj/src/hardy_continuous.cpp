#include "agelab/hardy_continuous.hpp"

#include <cmath>
#include <cstdio>

#include "agelab/summation.hpp"

namespace agelab {

namespace {

double row_mass(const AgeRepresentation& rep, Eigen::Index row_begin, Eigen::Index row_end) {
  CompensatedSum sum;
  for (const Eigen::MatrixXcd& b : rep.blocks())
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = row_begin; i < row_end; ++i) sum.add(std::norm(b(i, j)));
  return sum.value() * rep.grid().delta_a() * rep.grid().delta_sigma();
}

// the a = 0 row sits at n_nu/2 and belongs to the nonpositive (Psi_-) side
double mass_age_positive(const AgeRepresentation& rep) {
  return row_mass(rep, rep.grid().n_nu / 2 + 1, rep.grid().n_nu);
}
double mass_age_strictly_negative(const AgeRepresentation& rep) {
  return row_mass(rep, 0, rep.grid().n_nu / 2);
}
double mass_age_nonpositive(const AgeRepresentation& rep) {
  return row_mass(rep, 0, rep.grid().n_nu / 2 + 1);
}

}  // namespace

PsiSplit psi_split(const AgeRepresentation& rep) {
  const NuSigmaGrid& grid = rep.grid();
  const Eigen::Index zero_row = grid.n_nu / 2;
  PsiSplit split{AgeRepresentation::zero(grid), AgeRepresentation::zero(grid)};
  for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
    split.plus.blocks()[b].bottomRows(grid.n_nu - zero_row - 1) =
        rep.blocks()[b].bottomRows(grid.n_nu - zero_row - 1);
    split.minus.blocks()[b].topRows(zero_row + 1) = rep.blocks()[b].topRows(zero_row + 1);
  }
  return split;
}

double plus_mass(const DensityKernel& rho, double t) {
  const AgeRepresentation initial = to_age(rho);
  if (wrapped_mass_fraction(initial, t) > 1e-12)
    throw WindowOverflow("plus_mass: t = " + std::to_string(t) +
                         " pushes mass around the age window");
  const AgeRepresentation evolved = to_age(evolve_nu(rho, t));
  return mass_age_positive(evolved);
}

double hardy_residual(const DensityKernel& rho, HardySide side) {
  const AgeRepresentation rep = to_age(rho);
  const double total = rep.total_mass();
  if (total == 0.0) throw ZeroState("hardy_residual: zero state");
  const double forbidden = side == HardySide::below ? mass_age_positive(rep)
                                                    : mass_age_strictly_negative(rep);
  return forbidden / total;
}

double analytic_signal_check(const DensityKernel& rho) {
  const double norm = rho.norm();
  if (norm == 0.0) throw ZeroState("analytic_signal_check: zero state");
  const DensityKernel reconstructed = from_age(psi_split(to_age(rho)).minus);
  DensityKernel residual = rho;
  residual -= reconstructed;
  return residual.norm() / norm;
}

AgeRepresentation time_reverse(const AgeRepresentation& rep) {
  const NuSigmaGrid& grid = rep.grid();
  AgeRepresentation out = AgeRepresentation::zero(grid);
  for (std::size_t b = 0; b < rep.blocks().size(); ++b) {
    for (Eigen::Index k = 0; k < grid.n_nu; ++k) {
      out.blocks()[b].row(k) = rep.blocks()[b].row(grid.mirror(k)).conjugate();
    }
  }
  return out;
}

double snap_to_age_grid(const NuSigmaGrid& grid, double t) {
  return std::round(t / grid.delta_a()) * grid.delta_a();
}

SweepTable theorem_sweep(const DensityKernel& rho, const std::vector<double>& t_schedule) {
  for (std::size_t i = 1; i < t_schedule.size(); ++i) {
    if (!(t_schedule[i] > t_schedule[i - 1]))
      throw DomainError("theorem_sweep: schedule must be strictly increasing");
  }
  const AgeRepresentation initial = to_age(rho);
  const double total = initial.total_mass();
  if (total == 0.0) throw ZeroState("theorem_sweep: zero state");

  SweepTable table;
  table.rows.reserve(t_schedule.size());
  for (double requested : t_schedule) {
    const double t = snap_to_age_grid(rho.grid(), requested);
    if (wrapped_mass_fraction(initial, t) > 1e-12)
      throw WindowOverflow("theorem_sweep: t = " + std::to_string(requested) +
                           " would wrap mass around the age window");
    const AgeRepresentation evolved = to_age(evolve_nu(rho, t));
    const double plus = mass_age_positive(evolved);
    const double minus = mass_age_nonpositive(evolved);
    table.rows.push_back({t, plus, minus, plus / total});
  }
  return table;
}

std::string sweep_csv(const SweepTable& table) {
  std::string out = "t,plus_mass,minus_mass,hardy_residual\n";
  char buf[160];
  for (const SweepRow& row : table.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", row.t, row.plus_mass,
                  row.minus_mass, row.hardy_residual);
    out += buf;
  }
  return out;
}

}  // namespace agelab
