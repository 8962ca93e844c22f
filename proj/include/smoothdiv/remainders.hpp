#pragma once

#include <mpfr.h>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/record.hpp"

namespace smoothdiv {

// First harmonic remainder, defined for x >= 1 by
//   R1(x) = H(floor(x)) - log x - gamma + psi(x)/x,
// assembled here from a prepared enclosure of H(floor(x)).
Ball r1_from_parts(const Rat& x, const Ball& h_floor, const Ball& log_x,
                   const Ball& gamma, mpfr_prec_t prec);

// Same remainder evaluated at sqrt(x) for rational x: with s = floor(sqrt x),
//   R1(sqrt x) = H(s) - (log x)/2 - gamma + 1 - (s + 1/2)/sqrt(x),
// which avoids forming the fractional part of an irrational point.
Ball r1_at_sqrt(const Rat& x, const Ball& h_s, const Ball& log_x,
                const Ball& sqrt_x, const Ball& gamma, mpfr_prec_t prec);

// Second remainder, from the log-weighted harmonic sum:
//   R2(x) = Sum_{n<=x} log(x/n)/n - (log^2(x)/2 + gamma log x - gamma_1)
//         = log(x) H - A - log^2(x)/2 - gamma log(x) + gamma_1
// where H, A are Sum 1/n and Sum log(n)/n over n <= floor of the argument.
// Pass log of the argument (log x, or (log x)/2 when evaluating at sqrt x).
Ball r2_from_parts(const Ball& h_floor, const Ball& a_floor, const Ball& log_arg,
                   const Ball& gamma, const Ball& gamma1);

// Single-point evaluators building H and A from scratch; small x only.
Ball r1_remainder(const Rat& x, mpfr_prec_t prec);
Ball r2_remainder(const Rat& x, mpfr_prec_t prec);

// |R1(x)| <= 1/(8x^2) for x >= 1
ClaimRun check_r1_bound(const RangeSpec& range, const PrecisionPolicy& policy);
// |R2(x)| <= 0.132/x^2 for x >= 1
ClaimRun check_r2_bound(const RangeSpec& range, const PrecisionPolicy& policy);
// |R2(x) - R1(x)| <= 0.033/x^3 for x >= 1
ClaimRun check_r2_minus_r1(const RangeSpec& range, const PrecisionPolicy& policy);

}  // namespace smoothdiv
