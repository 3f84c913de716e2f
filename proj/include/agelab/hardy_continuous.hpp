#pragma once

#include <string>
#include <vector>

#include "agelab/age_transform.hpp"

namespace agelab {

/// Restriction split of an age representation at a = 0. The a = 0 bin (and
/// the periodic edge bin at a = -a_max) belong to minus, mirroring the
/// "negative or zero" convention of the discrete split; the resulting
/// single-bin ambiguity is excluded from the exact-swap statements.
struct PsiSplit {
  AgeRepresentation plus;   // samples kept for a > 0
  AgeRepresentation minus;  // samples kept for a <= 0
};

PsiSplit psi_split(const AgeRepresentation& rep);

/// Which half line a Hardy-class membership test forbids.
enum class HardySide { above, below };

/// Squared norm of the plus component of to_age(evolve_nu(rho, t)). By the
/// shift identity this equals the initial representation's mass on (t, inf)
/// whenever t sits on the age grid. Throws WindowOverflow when the evolved
/// support would wrap.
double plus_mass(const DensityKernel& rho, double t);

/// Fraction of total age-representation mass on the forbidden half line
/// (a > 0 for below, a < 0 for above). Zero certifies Hardy-class membership
/// from the requested side at grid resolution. Throws ZeroState.
double hardy_residual(const DensityKernel& rho, HardySide side);

/// Independent cross-check of the same membership: ||rho - P_minus rho|| /
/// ||rho||, where P_minus reconstructs the nu function from only the a <= 0
/// half of its transport. Throws ZeroState.
double analytic_signal_check(const DensityKernel& rho);

/// Wigner time reversal K: rho_hat(a) -> conj(rho_hat(-a)). Antiunitary
/// involution; swaps the Psi_+/Psi_- masses up to the a = 0 and edge bins.
AgeRepresentation time_reverse(const AgeRepresentation& rep);

/// One diagnostics row of a theorem sweep. t is the actually evolved time
/// (the requested time snapped onto the age grid).
struct SweepRow {
  double t;
  double plus_mass;
  double minus_mass;
  double hardy_residual;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Evolve the state across the schedule and tabulate the Psi decomposition.
/// Requested times are snapped to the nearest age-grid multiple so the a = 0
/// cut aligns bin-exactly between evolved and initial representations; the
/// snapped times are what the table reports. The schedule must be strictly
/// increasing; WindowOverflow reports the first offending t.
SweepTable theorem_sweep(const DensityKernel& rho, const std::vector<double>& t_schedule);

/// Nearest multiple of the grid's delta_a.
double snap_to_age_grid(const NuSigmaGrid& grid, double t);

/// CSV with header "t,plus_mass,minus_mass,hardy_residual".
std::string sweep_csv(const SweepTable& table);

}  // namespace agelab
