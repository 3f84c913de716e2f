#include "agelab/bit_tape.hpp"

#include <cstddef>

namespace agelab {

namespace {

void check_bits(const std::vector<std::uint8_t>& bits, const char* side) {
  for (std::uint8_t b : bits) {
    if (b > 1) throw DomainError(std::string("BitTape: ") + side + " bit not 0/1");
  }
}

double decode(const std::vector<std::uint8_t>& bits) {
  double value = 0.0;
  double scale = 0.5;
  for (std::uint8_t b : bits) {
    if (b) value += scale;
    scale *= 0.5;
  }
  return value;
}

}  // namespace

BitTape::BitTape(std::vector<std::uint8_t> y_bits, std::vector<std::uint8_t> x_bits)
    : y_bits_(std::move(y_bits)), x_bits_(std::move(x_bits)) {
  check_bits(y_bits_, "y");
  check_bits(x_bits_, "x");
}

bool BitTape::has_time(int n) const {
  if (n >= 1) return std::size_t(n) <= y_bits_.size();
  return std::size_t(-n) < x_bits_.size();
}

int BitTape::bit_at_time(int n) const {
  if (!has_time(n))
    throw PrecisionExhausted("BitTape: no bit at time coordinate " + std::to_string(n));
  if (n >= 1) return y_bits_[std::size_t(n) - 1];
  return x_bits_[std::size_t(-n)];
}

double BitTape::decode_x() const { return decode(x_bits_); }
double BitTape::decode_y() const { return decode(y_bits_); }

BitTape baker_forward(const BitTape& tape) {
  if (tape.x_bits().empty()) throw EmptyFuture("baker_forward: x precision exhausted");
  std::vector<std::uint8_t> x(tape.x_bits().begin() + 1, tape.x_bits().end());
  std::vector<std::uint8_t> y;
  y.reserve(tape.y_bits().size() + 1);
  y.push_back(tape.x_bits().front());
  y.insert(y.end(), tape.y_bits().begin(), tape.y_bits().end());
  return BitTape(std::move(y), std::move(x));
}

BitTape baker_inverse(const BitTape& tape) {
  if (tape.y_bits().empty()) throw EmptyPast("baker_inverse: y precision exhausted");
  std::vector<std::uint8_t> y(tape.y_bits().begin() + 1, tape.y_bits().end());
  std::vector<std::uint8_t> x;
  x.reserve(tape.x_bits().size() + 1);
  x.push_back(tape.y_bits().front());
  x.insert(x.end(), tape.x_bits().begin(), tape.x_bits().end());
  return BitTape(std::move(y), std::move(x));
}

BitTape baker_power(const BitTape& tape, int k) {
  BitTape t = tape;
  for (; k > 0; --k) t = baker_forward(t);
  for (; k < 0; ++k) t = baker_inverse(t);
  return t;
}

std::pair<double, double> baker_real(double x, double y) {
  if (!(x >= 0.0 && x < 1.0 && y >= 0.0 && y < 1.0))
    throw DomainError("baker_real: inputs must lie in [0,1)");
  if (x < 0.5) return {2.0 * x, 0.5 * y};
  return {2.0 * x - 1.0, 0.5 * y + 0.5};
}

}  // namespace agelab
