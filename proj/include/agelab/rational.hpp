#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "agelab/errors.hpp"

namespace agelab {

/// Exact rational with 64-bit numerator/denominator, always stored in lowest
/// terms with a positive denominator. Covers every cylinder measure 2^-d this
/// library can represent (d <= 62).
class Rational {
 public:
  Rational() = default;

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  /// 2^-d as an exact rational.
  static Rational dyadic_unit(int d) {
    if (d < 0 || d > 62) throw DomainError("Rational: dyadic exponent out of range");
    return Rational(1, std::int64_t(1) << d);
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return double(num_) / double(den_); }

  /// Serialized form "p/q" (integers serialize as "p/1").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  friend bool operator==(const Rational& a, const Rational& b) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace agelab
