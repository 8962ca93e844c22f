#pragma once

#include <cstdint>
#include <vector>

#include "smoothdiv/rational.hpp"
#include "smoothdiv/sieve.hpp"

namespace smoothdiv {

// Sum_{n <= X} tau(n) via the hyperbola identity
//   2 * Sum_{n <= s} floor(X/n) - s^2,  s = floor(sqrt(X)),
// in O(sqrt X) integer divisions.
int64_t divisor_sum_u64(uint64_t X);

// Same sum for rational x >= 0 (only floor(x) matters).
Int divisor_sum(const Rat& x);

// Exact harmonic numbers H(1), ..., H(n) built incrementally.
// Intended for small n (the common denominator grows like lcm(1..n)).
struct HarmonicTable {
  std::vector<Rat> H;  // H[0] = 0
  explicit HarmonicTable(uint64_t n);
};

// H(n) = Sum_{k <= n} 1/k, exact. O(n) mpq additions; small n only.
Rat harmonic_exact(uint64_t n);

// Sum_{n <= X} tau(n)/n, exact. O(X) mpq additions; small X only.
Rat divisor_harmonic_sum_exact(uint64_t X, const TauSieve& sieve);

}  // namespace smoothdiv
