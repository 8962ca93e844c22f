#pragma once

#include "smoothdiv/ball.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/record.hpp"

namespace smoothdiv {

// M(x) = sum_{n <= x} mu(n) and m(x) = sum_{n <= x} mu(n)/n.
//
// check_mertens_sign: the gap M(t) - t m(t) is negative for every integer
// 2 <= t <= 18349 (equivalently M(t)/t < m(t)) and first turns non-negative
// at t = 18350. Signs are decided exactly: m(t) = N/D over the primorial
// denominator D = prod_{p prime, p <= t} p, and sign(M(t) - t m(t)) =
// sign(M D - N t) as integers. The scan covers
// 2 <= t <= min(floor(x_max), 18350) regardless of --x-min; t = 1 is
// degenerate (gap = 0) and excluded.
//
// check_mertens_ratio: for real x >= 94,
//   2/3 <= sup_{t <= x, t real} |m(t)| t / sup_{t <= x} |M(t)| <= 3/2.
// Both sups are maintained along integers; on [n, n+1) the sup of |m(t)| t
// climbs toward |m(n)| (n+1), which the upper rows include, so each row
// certifies its whole unit interval of real x. Restricting t to integers
// would understate the numerator and falsely fail near x = 150. Rows cover
// max(94, floor(x_min)) <= t <= floor(x_max).

ClaimRun check_mertens_sign(const RangeSpec& spec, const PrecisionPolicy& pol);
ClaimRun check_mertens_ratio(const RangeSpec& spec, const PrecisionPolicy& pol);

}  // namespace smoothdiv
