#pragma once

#include <cstdint>
#include <vector>

namespace smoothdiv {

// Linear sieve of tau(n) = number of divisors, for 1 <= n <= limit.
struct TauSieve {
  std::vector<uint16_t> tau;  // tau[n]; tau[0] unused
  explicit TauSieve(uint64_t limit);
  uint64_t limit() const { return tau.size() - 1; }
};

// Linear sieve of the Moebius function, mu[n] in {-1, 0, 1}.
struct MobiusSieve {
  std::vector<int8_t> mu;
  std::vector<uint32_t> primes;
  explicit MobiusSieve(uint64_t limit);
  uint64_t limit() const { return mu.size() - 1; }
};

}  // namespace smoothdiv
