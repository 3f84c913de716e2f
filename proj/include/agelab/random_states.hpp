#pragma once

// Seeded factories for random tapes and expansions, shared by the experiment
// harness and the test suites. Everything draws from the portable SplitMix64
// stream, so a recorded seed reproduces a run bit for bit.

#include <vector>

#include "agelab/bit_tape.hpp"
#include "agelab/rng.hpp"
#include "agelab/walsh.hpp"

namespace agelab {

inline BitTape random_tape(SplitMix64& rng, std::size_t y_bits, std::size_t x_bits) {
  std::vector<std::uint8_t> y(y_bits), x(x_bits);
  for (auto& b : y) b = std::uint8_t(rng.next_bit());
  for (auto& b : x) b = std::uint8_t(rng.next_bit());
  return BitTape(std::move(y), std::move(x));
}

inline WalshIndexSet random_index_set(SplitMix64& rng, int lo, int hi, int max_size) {
  const int size = int(rng.next_int(1, max_size));
  std::vector<int> indices;
  while (int(indices.size()) < size) {
    const int candidate = int(rng.next_int(lo, hi));
    bool duplicate = false;
    for (int existing : indices) duplicate |= (existing == candidate);
    if (!duplicate) indices.push_back(candidate);
  }
  return WalshIndexSet(std::move(indices));
}

struct ExpansionOptions {
  int terms = 8;
  int lo = -16;
  int hi = 16;
  int max_set_size = 4;
  bool mean_zero = true;
  bool plus_only = false;  // every index set gets max F >= 1
};

inline WalshExpansion random_expansion(SplitMix64& rng, const ExpansionOptions& opt) {
  WalshExpansion rho;
  while (int(rho.term_count()) < opt.terms) {
    WalshIndexSet F = random_index_set(rng, opt.lo, opt.hi, opt.max_set_size);
    if (opt.plus_only && F.max() < 1) continue;
    const Complex a(rng.next_normal(), rng.next_normal());
    rho.set(F, a);
  }
  if (!opt.mean_zero) rho.set(WalshIndexSet{}, Complex(rng.next_normal(), 0.0));
  return rho;
}

}  // namespace agelab
