#pragma once

#include <string>
#include <vector>

#include "agelab/walsh.hpp"

namespace agelab {

/// Orthogonal decomposition of an expansion into the forward-stable subspace
/// (terms of age max F >= 1) and the transient one (age <= 0, including the
/// constant term). plus + minus reconstructs the input term for term.
struct HardySplitDiscrete {
  WalshExpansion plus;
  WalshExpansion minus;
};

/// Classify every term by its age: max F >= 1 goes to plus, max F <= 0 and
/// the constant term go to minus.
HardySplitDiscrete split_by_age(const WalshExpansion& rho);

/// Checks that one Koopman step keeps a plus-subspace expansion inside the
/// plus subspace. Throws InvalidSubspace when the input has minus terms.
bool verify_forward_stability(const WalshExpansion& rho_plus);

/// Norm of the minus component of U^n rho. Exactly zero once every term has
/// been shifted into the plus subspace; the constant term never leaves minus.
double minus_norm_after(const WalshExpansion& rho, int n);

/// Smallest n* with minus_norm_after(rho, n) = 0 for all n >= n*; equals
/// max(0, 1 - min_F(max F)) for mean-zero nonzero expansions.
/// Throws AgeUndefinedForEquilibrium on a constant term, EmptyExpansion on 0.
int absorption_time(const WalshExpansion& rho);

/// One row of the discrete convergence table.
struct ConvergenceRow {
  int n;
  double minus_norm;
  double plus_norm;
};

/// Rows for n = 0..n_max.
std::vector<ConvergenceRow> convergence_table(const WalshExpansion& rho, int n_max);

/// CSV with header "n,minus_norm,plus_norm" (17 significant digits).
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace agelab
