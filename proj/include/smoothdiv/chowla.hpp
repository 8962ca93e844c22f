#pragma once

#include <cstdint>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/record.hpp"

namespace smoothdiv {

// Parameters of G_{alpha,beta,j}(x) = Sum_{n <= x^(1/alpha)} n^beta B_j({x/n}).
struct GParams {
  Rat alpha;      // > 1; the main bound additionally needs alpha < 3
  unsigned beta;  // >= 0
  unsigned j;     // >= 2; exact evaluation implemented for j in {2, 3}
};

// Exact value; the cutoff floor(x^(1/alpha)) is the largest n with
// n^num(alpha) <= x^den(alpha), decided in integers.
Rat g_sum(const GParams& p, const Rat& x);

// 4 Gamma_j ((zeta(j-1/2) + 1/4) x^e1 + zeta(j+1/2) x^e2) L_{alpha,beta}(x)
// with e1 = beta/alpha - 1/(2 alpha) + 1/2, e2 = beta/alpha + 3/(2 alpha) - 1/2
// and L_{alpha,beta}(x) = (3-alpha)/(2 alpha (beta+1)) log(x)/log(2) + 1.
// Needs 1 < alpha < 3 and x >= 1.
Ball prop_main_bound(const GParams& p, const Rat& x, mpfr_prec_t prec);

// Gamma_j x^((beta+1)/alpha), valid for every alpha > 1
Ball trivial_bound(const GParams& p, const Rat& x, mpfr_prec_t prec);

// |G| against the main and trivial bounds over the parameter grid
// alpha in {3/2, 2, 5/2} x beta in {0,1,2} x j in {2,3}, one combination per
// sample, cycled deterministically (prop7 claim; x >= 2)
ClaimRun check_prop7(const RangeSpec& range, const PrecisionPolicy& policy);

// |Sum_{n<=sqrt x} n B_2({x/n})| < x^(3/4) log x for x >= 300, plus the
// intermediate form 2.81 x^(3/4) (1 + log x/(8 log 2)) (cor8 claim)
ClaimRun check_cor8(const RangeSpec& range, const PrecisionPolicy& policy);

}  // namespace smoothdiv
