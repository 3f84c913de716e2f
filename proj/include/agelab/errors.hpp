#pragma once

#include <stdexcept>
#include <string>

namespace agelab {

/// Base class for all agelab errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Symbolic-dynamics errors ---------------------------------------------------

/// Forward Baker step requested but the x-side of the tape has no bits left.
struct EmptyFuture final : Error {
  using Error::Error;
};

/// Inverse Baker step requested but the y-side of the tape has no bits left.
struct EmptyPast final : Error {
  using Error::Error;
};

/// A bit read or evaluation fell outside the stored tape precision.
struct PrecisionExhausted final : Error {
  using Error::Error;
};

/// Age requested for an expansion with a nonzero constant term.
struct AgeUndefinedForEquilibrium final : Error {
  using Error::Error;
};

/// Operation on the zero expansion where a nonzero state is required.
struct EmptyExpansion final : Error {
  using Error::Error;
};

/// Input claimed to lie in a Hardy subspace but does not.
struct InvalidSubspace final : Error {
  using Error::Error;
};

// Continuous-spectrum errors -------------------------------------------------

/// Argument outside the mathematical domain of the operation.
struct DomainError final : Error {
  using Error::Error;
};

/// A packet or kernel tail exceeds the configured decay threshold.
struct DecayViolation final : Error {
  using Error::Error;
};

/// Operands live on incompatible grids.
struct GridMismatch final : Error {
  using Error::Error;
};

/// A normalization-dependent diagnostic was applied to the zero state.
struct ZeroState final : Error {
  using Error::Error;
};

/// An age-domain shift would wrap significant mass around the periodic window.
struct WindowOverflow final : Error {
  using Error::Error;
};

// Tooling errors -------------------------------------------------------------

/// Invalid or missing configuration value; message carries the field path.
struct ConfigError final : Error {
  using Error::Error;
};

/// File could not be read, written, or parsed.
struct IoError final : Error {
  using Error::Error;
};

}  // namespace agelab
