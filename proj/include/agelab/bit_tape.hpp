#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "agelab/errors.hpp"

namespace agelab {

/// Exact symbolic representation of a point of the unit square.
///
/// A point (x, y) with binary expansions x = 0.x1 x2 ... and y = 0.y1 y2 ...
/// is stored as two finite bit sequences, x1 first and y1 first. The Baker
/// map then acts as a pure bit move: a forward step transfers x1 to the front
/// of the y side, the inverse step transfers y1 back. Total bit count is
/// conserved, and every derived quantity (coordinates, cell memberships) is
/// exact -- the tape never pads silently; running out of bits raises.
///
/// Time coordinates: bit_at_time(n) is the bit read by the n-th Rademacher
/// function. One forward application of the map advances every recorded bit
/// one step into the past, so bit_at_time(n) of B(w) equals bit_at_time(n-1)
/// of w. Concretely n = 0 reads x1 (the current cell: 0 means the left half),
/// n <= -1 reads x_{1-n} (future digits), and n >= 1 reads y_n (past digits).
class BitTape {
 public:
  BitTape() = default;

  /// Bits are y1-first and x1-first; each element must be 0 or 1.
  BitTape(std::vector<std::uint8_t> y_bits, std::vector<std::uint8_t> x_bits);

  const std::vector<std::uint8_t>& y_bits() const { return y_bits_; }
  const std::vector<std::uint8_t>& x_bits() const { return x_bits_; }

  std::size_t total_bits() const { return y_bits_.size() + x_bits_.size(); }

  bool has_time(int n) const;

  /// Bit at time coordinate n; throws PrecisionExhausted outside the tape.
  int bit_at_time(int n) const;

  /// Decoded coordinates sum_i b_i 2^-i. Exact as long as the sides carry at
  /// most 52 bits (the tests stay well under).
  double decode_x() const;
  double decode_y() const;

  friend bool operator==(const BitTape&, const BitTape&) = default;

 private:
  std::vector<std::uint8_t> y_bits_;
  std::vector<std::uint8_t> x_bits_;
};

/// One forward Baker step (doubling x mod 1, halving y, stacking).
/// Throws EmptyFuture when the x side is exhausted.
BitTape baker_forward(const BitTape& tape);

/// Exact inverse step. Throws EmptyPast when the y side is exhausted.
BitTape baker_inverse(const BitTape& tape);

/// B^k: k forward steps for k > 0, |k| inverse steps for k < 0.
BitTape baker_power(const BitTape& tape, int k);

/// Floating-point convenience evaluation of the Baker map on [0,1)^2.
/// The boundary x = 1/2 follows the tape convention (x1 = 1, right half),
/// so the second branch applies for x >= 1/2. Exact on dyadic inputs.
std::pair<double, double> baker_real(double x, double y);

}  // namespace agelab
