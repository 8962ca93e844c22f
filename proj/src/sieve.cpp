#include "smoothdiv/sieve.hpp"

#include "smoothdiv/rational.hpp"

namespace smoothdiv {

namespace {
constexpr uint64_t kSieveCap = uint64_t(1) << 28;

void check_limit(uint64_t limit) {
  if (limit < 1 || limit > kSieveCap)
    throw domain_error("sieve limit out of range [1, 2^28]");
}
}  // namespace

TauSieve::TauSieve(uint64_t limit) {
  check_limit(limit);
  tau.assign(limit + 1, 0);
  // cnt[n] = multiplicity of the smallest prime factor of n
  std::vector<uint8_t> cnt(limit + 1, 0);
  std::vector<uint32_t> primes;
  tau[1] = 1;
  for (uint64_t i = 2; i <= limit; ++i) {
    if (tau[i] == 0) {
      primes.push_back(uint32_t(i));
      tau[i] = 2;
      cnt[i] = 1;
    }
    for (uint32_t p : primes) {
      uint64_t ip = i * p;
      if (ip > limit) break;
      if (i % p == 0) {
        cnt[ip] = cnt[i] + 1;
        tau[ip] = uint16_t(tau[i] / (cnt[i] + 1) * (cnt[i] + 2));
        break;
      }
      cnt[ip] = 1;
      tau[ip] = uint16_t(tau[i] * 2);
    }
  }
}

MobiusSieve::MobiusSieve(uint64_t limit) {
  check_limit(limit);
  mu.assign(limit + 1, 2);  // 2 marks "not yet sieved"
  mu[1] = 1;
  for (uint64_t i = 2; i <= limit; ++i) {
    if (mu[i] == 2) {
      primes.push_back(uint32_t(i));
      mu[i] = -1;
    }
    for (uint32_t p : primes) {
      uint64_t ip = i * p;
      if (ip > limit) break;
      if (i % p == 0) {
        mu[ip] = 0;
        break;
      }
      mu[ip] = int8_t(-mu[i]);
    }
  }
}

}  // namespace smoothdiv
