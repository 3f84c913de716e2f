#include "agelab/hardy_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "agelab/summation.hpp"

namespace agelab {

namespace {

bool is_plus_term(const WalshIndexSet& F) { return !F.empty() && F.max() >= 1; }

}  // namespace

HardySplitDiscrete split_by_age(const WalshExpansion& rho) {
  HardySplitDiscrete split;
  for (const auto& [F, a] : rho.terms()) {
    if (is_plus_term(F)) {
      split.plus.set(F, a);
    } else {
      split.minus.set(F, a);
    }
  }
  return split;
}

bool verify_forward_stability(const WalshExpansion& rho_plus) {
  for (const auto& [F, a] : rho_plus.terms()) {
    if (!is_plus_term(F))
      throw InvalidSubspace("verify_forward_stability: input has minus-subspace terms");
  }
  const WalshExpansion shifted = koopman_apply(rho_plus, 1);
  return std::all_of(shifted.terms().begin(), shifted.terms().end(),
                     [](const auto& term) { return is_plus_term(term.first); });
}

double minus_norm_after(const WalshExpansion& rho, int n) {
  if (n < 0) throw DomainError("minus_norm_after: n must be nonnegative");
  CompensatedSum sum;
  for (const auto& [F, a] : rho.terms()) {
    if (!is_plus_term(F.shifted(n)))
      sum.add(a.real() * a.real() + a.imag() * a.imag());
  }
  return std::sqrt(sum.value());
}

int absorption_time(const WalshExpansion& rho) {
  if (rho.is_zero()) throw EmptyExpansion("absorption_time: zero expansion");
  if (!rho.mean_zero())
    throw AgeUndefinedForEquilibrium("absorption_time: expansion has a constant term");
  int min_age = rho.terms().begin()->first.max();
  for (const auto& [F, a] : rho.terms()) min_age = std::min(min_age, F.max());
  return std::max(0, 1 - min_age);
}

std::vector<ConvergenceRow> convergence_table(const WalshExpansion& rho, int n_max) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(std::size_t(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const HardySplitDiscrete split = split_by_age(koopman_apply(rho, n));
    rows.push_back({n, split.minus.norm(), split.plus.norm()});
  }
  return rows;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::string out = "n,minus_norm,plus_norm\n";
  char buf[96];
  for (const ConvergenceRow& row : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", row.n, row.minus_norm, row.plus_norm);
    out += buf;
  }
  return out;
}

}  // namespace agelab
