#pragma once

#include "smoothdiv/ball.hpp"

namespace smoothdiv {

Ball const_pi_ball(mpfr_prec_t prec);
Ball const_log2_ball(mpfr_prec_t prec);

// Euler-Mascheroni constant, one-ulp enclosure
Ball const_euler_gamma(mpfr_prec_t prec);

// First Stieltjes constant gamma_1 = lim (Sum_{k<=n} log k / k - log(n)^2 / 2),
// via Euler-Maclaurin with a certified remainder; radius <= 2^(-prec+4)
Ball const_stieltjes_gamma1(mpfr_prec_t prec);

// zeta(s) for half-integer s = two_s / 2 (two_s odd, >= 3), via truncated
// series + Euler-Maclaurin corrections + certified remainder
Ball zeta_half_odd(unsigned two_s, mpfr_prec_t prec);

// plain truncated series with the integral tail enclosure
// 0 <= Sum_{n>T} n^(-s) <= T^(1-s)/(s-1); wide, used as a cross-check
Ball zeta_half_odd_series(unsigned two_s, unsigned T, mpfr_prec_t prec);

// precision used for shared constants inside claim evaluations; comfortably
// above the working precision so constant error never dominates
inline mpfr_prec_t constants_prec(mpfr_prec_t working_bits) {
  return working_bits + 64 > 192 ? working_bits + 64 : 192;
}

}  // namespace smoothdiv
