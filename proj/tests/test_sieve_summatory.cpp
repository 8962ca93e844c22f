#include <doctest.h>

#include <cstdint>

#include "smoothdiv/sieve.hpp"
#include "smoothdiv/summatory.hpp"

using namespace smoothdiv;

TEST_CASE("tau sieve spot values") {
  TauSieve sieve(100);
  CHECK(sieve.limit() == 100);
  CHECK(sieve.tau[1] == 1);
  CHECK(sieve.tau[2] == 2);
  CHECK(sieve.tau[12] == 6);
  CHECK(sieve.tau[36] == 9);
  CHECK(sieve.tau[97] == 2);
  CHECK(sieve.tau[100] == 9);
  int64_t total = 0;
  for (uint64_t n = 1; n <= 100; ++n) total += sieve.tau[n];
  CHECK(total == 482);
}

TEST_CASE("moebius sieve spot values") {
  MobiusSieve sieve(100);
  CHECK(sieve.limit() == 100);
  CHECK(sieve.mu[1] == 1);
  CHECK(sieve.mu[2] == -1);
  CHECK(sieve.mu[4] == 0);
  CHECK(sieve.mu[6] == 1);
  CHECK(sieve.mu[30] == -1);
  CHECK(sieve.mu[97] == -1);
  int64_t M = 0;
  for (uint64_t n = 1; n <= 100; ++n) M += sieve.mu[n];
  CHECK(M == 1);
  CHECK(sieve.primes.size() == 25);
  CHECK(sieve.primes.front() == 2);
  CHECK(sieve.primes.back() == 97);
}

TEST_CASE("divisor summatory function via the hyperbola") {
  CHECK(divisor_sum_u64(1) == 1);
  CHECK(divisor_sum_u64(2) == 3);
  CHECK(divisor_sum_u64(6) == 14);
  CHECK(divisor_sum_u64(10) == 27);
  CHECK(divisor_sum_u64(100) == 482);

  // matches the sieve prefix everywhere in a small window
  TauSieve sieve(300);
  int64_t prefix = 0;
  for (uint64_t n = 1; n <= 300; ++n) {
    prefix += sieve.tau[n];
    CHECK(divisor_sum_u64(n) == prefix);
  }

  // only the floor of a rational argument matters
  CHECK(divisor_sum(Rat(21, 2)) == 27);
  CHECK(divisor_sum(Rat(0)) == 0);
}

TEST_CASE("exact harmonic numbers") {
  HarmonicTable table(10);
  REQUIRE(table.H.size() == 11);
  CHECK(table.H[0] == 0);
  CHECK(table.H[1] == 1);
  CHECK(table.H[3] == Rat(11, 6));
  CHECK(table.H[10] == Rat(7381, 2520));
  CHECK(harmonic_exact(5) == Rat(137, 60));
  CHECK(harmonic_exact(10) == Rat(7381, 2520));
}

TEST_CASE("exact tau over n prefix sums") {
  TauSieve sieve(6);
  CHECK(divisor_harmonic_sum_exact(4, sieve) == Rat(41, 12));
  CHECK(divisor_harmonic_sum_exact(5, sieve) == Rat(229, 60));
  CHECK(divisor_harmonic_sum_exact(6, sieve) == Rat(269, 60));
}
