#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace agelab {

/// Error-free transformation: s = fl(a+b), e = the exact rounding error,
/// so a + b == s + e holds exactly (Knuth two-sum).
inline std::pair<double, double> two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  const double e = (a - av) + (b - bv);
  return {s, e};
}

/// Neumaier-compensated running sum. Deterministic and accurate to ~1 ulp of
/// the true result for the accumulation orders used in this library.
class CompensatedSum {
 public:
  void add(double x) {
    const auto [s, e] = two_sum(sum_, x);
    sum_ = s;
    comp_ += e;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Exact sum of a multiset of doubles, kept as a Shewchuk-style expansion of
/// nonoverlapping components. The represented value is exact, so two sums of
/// the same multiset compare equal no matter the insertion order. Used by the
/// test suites to assert identities such as Pythagoras splits with zero
/// tolerance.
class ExactSum {
 public:
  void add(double x) {
    std::vector<double> next;
    next.reserve(components_.size() + 1);
    double q = x;
    for (double c : components_) {
      const auto [s, e] = two_sum(q, c);
      if (e != 0.0) next.push_back(e);
      q = s;
    }
    if (q != 0.0) next.push_back(q);
    components_ = std::move(next);
  }

  void subtract(double x) { add(-x); }

  /// True iff the represented value is exactly zero.
  bool is_zero() const { return components_.empty(); }

  /// Exact comparison (a - b == 0 over the reals).
  friend bool exactly_equal(const ExactSum& a, const ExactSum& b) {
    ExactSum diff = a;
    for (double c : b.components_) diff.subtract(c);
    return diff.is_zero();
  }

  /// Faithful double approximation of the exact value.
  double value() const {
    double s = 0.0;
    for (double c : components_) s += c;  // components grow in magnitude
    return s;
  }

 private:
  std::vector<double> components_;
};

}  // namespace agelab
