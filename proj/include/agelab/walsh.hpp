#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "agelab/bit_tape.hpp"

namespace agelab {

using Complex = std::complex<double>;

/// Finite set of integer time coordinates labelling a Walsh function
/// alpha_F = prod_{n in F} alpha_n. Canonically sorted; the empty set labels
/// the constant function.
class WalshIndexSet {
 public:
  WalshIndexSet() = default;
  WalshIndexSet(std::initializer_list<int> indices);
  explicit WalshIndexSet(std::vector<int> indices);

  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  const std::vector<int>& indices() const { return indices_; }

  /// Largest element: the age eigenvalue of alpha_F. Throws DomainError on
  /// the empty set.
  int max() const;
  int min() const;

  /// F + n = {n1 + n, ..., nr + n}; the empty set is invariant.
  WalshIndexSet shifted(int n) const;

  friend auto operator<=>(const WalshIndexSet& a, const WalshIndexSet& b) {
    return a.indices_ <=> b.indices_;
  }
  friend bool operator==(const WalshIndexSet&, const WalshIndexSet&) = default;

 private:
  std::vector<int> indices_;  // sorted, pairwise distinct
};

/// Finite linear combination of Walsh functions, stored as a sorted map from
/// index set to coefficient. Only nonzero coefficients are kept, so the zero
/// expansion has no terms and "mean zero" is simply the absence of the empty
/// index set.
class WalshExpansion {
 public:
  using TermMap = std::map<WalshIndexSet, Complex>;

  WalshExpansion() = default;

  /// Single term a * alpha_F.
  static WalshExpansion term(WalshIndexSet F, Complex a);

  /// Sets the coefficient of F (erases the term when a == 0).
  void set(const WalshIndexSet& F, Complex a);

  /// Coefficient of F, zero when absent.
  Complex coeff(const WalshIndexSet& F) const;

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// True iff the coefficient of the empty set vanishes.
  bool mean_zero() const;

  WalshExpansion& operator+=(const WalshExpansion& other);
  WalshExpansion& operator-=(const WalshExpansion& other);
  WalshExpansion& operator*=(Complex scale);

  friend WalshExpansion operator+(WalshExpansion a, const WalshExpansion& b) { return a += b; }
  friend WalshExpansion operator-(WalshExpansion a, const WalshExpansion& b) { return a -= b; }
  friend WalshExpansion operator*(Complex s, WalshExpansion a) { return a *= s; }

  /// Sum of |a_F|^2 (equals the squared L^2 norm by orthonormality).
  double norm_squared() const;
  double norm() const;

  friend bool operator==(const WalshExpansion&, const WalshExpansion&) = default;

 private:
  TermMap terms_;
};

/// alpha_n evaluated at a tape point: +1 on the Delta_1 side, -1 on Delta_2.
/// Satisfies alpha_n(w) = alpha_0(B^-n w), i.e. it reads the tape bit at time
/// coordinate n. Throws PrecisionExhausted outside the stored bits.
int rademacher_eval(int n, const BitTape& tape);

/// Product of rademacher_eval over F; the empty product is +1.
int walsh_eval(const WalshIndexSet& F, const BitTape& tape);

/// Pointwise value sum_F a_F alpha_F(w). Needs every index of every term
/// within tape precision.
Complex evaluate(const WalshExpansion& rho, const BitTape& tape);

/// Koopman operator U^n: shifts every index set by n (bilateral, unitary).
WalshExpansion koopman_apply(const WalshExpansion& rho, int n);

/// Age operator: multiplies the alpha_F coefficient by max F. Throws
/// AgeUndefinedForEquilibrium when the constant term is present -- the age of
/// the equilibrium state is undefined.
WalshExpansion age_apply(const WalshExpansion& rho);

/// || (U^-n A U^n - A - nI) rho ||. The operator acts diagonally with integer
/// eigenvalue max(F+n) - max(F) - n per term, so the result is exactly zero
/// for every finite mean-zero expansion.
double age_commutation_residual(const WalshExpansion& rho, int n);

/// sum_F conj(a_F) b_F; equals the L^2(S, mu) inner product by orthonormality
/// (antilinear in the left factor).
Complex inner_product(const WalshExpansion& a, const WalshExpansion& b);

// Text serialization ----------------------------------------------------------
//
// One line per term, sorted by index set:
//   F={n1,n2,...} re im
// with F={} for the constant term. Reals are printed with 17 significant
// digits so the round trip is exact.

std::string to_text(const WalshExpansion& rho);
WalshExpansion expansion_from_text(const std::string& text);

}  // namespace agelab
