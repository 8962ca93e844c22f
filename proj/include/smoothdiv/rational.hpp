#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smoothdiv {

using Int = mpz_class;
using Rat = mpq_class;

// floor(x), valid for negative x as well
Int rat_floor(const Rat& x);

// x - floor(x), always in [0, 1)
Rat rat_frac(const Rat& x);

// floor(sqrt(x)) for x >= 0; equals isqrt(floor(x))
Int rat_isqrt(const Rat& x);

// largest n >= 0 with n^a <= x^b, for x >= 0 and a, b >= 1.
// Decides n^a * den(x)^b <= num(x)^b in integers, so the cutoff is exact
// even when x^(b/a) is irrational.
Int rat_root_floor(const Rat& x, unsigned a, unsigned b);

uint64_t to_u64(const Int& z);

// Accepts "p/q", plain integers, and decimal strings like "12.75".
Rat parse_rational(const std::string& s);

inline Rat rat_of(uint64_t n) { return Rat(Int(n)); }

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace smoothdiv
