#include "smoothdiv/summatory.hpp"

#include <cmath>

namespace smoothdiv {

int64_t divisor_sum_u64(uint64_t X) {
  if (X == 0) return 0;
  uint64_t s = uint64_t(std::sqrt(double(X)));
  while (s * s > X) --s;
  while ((s + 1) * (s + 1) <= X) ++s;
  uint64_t acc = 0;
  for (uint64_t n = 1; n <= s; ++n) acc += X / n;
  return int64_t(2 * acc - s * s);
}

Int divisor_sum(const Rat& x) {
  if (sgn(x) < 0) throw domain_error("divisor_sum: negative argument");
  Int X = rat_floor(x);
  if (X.fits_ulong_p()) return Int(divisor_sum_u64(mpz_get_ui(X.get_mpz_t())));
  Int s;
  mpz_sqrt(s.get_mpz_t(), X.get_mpz_t());
  Int acc = 0;
  for (Int n = 1; n <= s; ++n) acc += X / n;
  return 2 * acc - s * s;
}

HarmonicTable::HarmonicTable(uint64_t n) {
  H.reserve(n + 1);
  H.emplace_back(0);
  Rat h(0);
  for (uint64_t k = 1; k <= n; ++k) {
    h += Rat(1, k);
    H.push_back(h);
  }
}

Rat harmonic_exact(uint64_t n) {
  Rat h(0);
  for (uint64_t k = 1; k <= n; ++k) h += Rat(1, k);
  return h;
}

Rat divisor_harmonic_sum_exact(uint64_t X, const TauSieve& sieve) {
  if (X > sieve.limit()) throw domain_error("divisor_harmonic_sum_exact: beyond sieve");
  Rat acc(0);
  for (uint64_t n = 1; n <= X; ++n) {
    Rat t(sieve.tau[n], n);
    t.canonicalize();
    acc += t;
  }
  return acc;
}

}  // namespace smoothdiv
