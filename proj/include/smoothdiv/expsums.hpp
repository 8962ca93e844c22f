#pragma once

#include <cstdint>
#include <functional>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/record.hpp"

namespace smoothdiv {

// Phase with exact rational values at integers and certified derivative
// enclosures at real points. When has_d2_range is set, f'' stays within
// [lambda2, c2*lambda2] on the intended summation block.
struct PhaseFunction {
  std::function<Rat(uint64_t)> value;
  std::function<Ball(const Ball&, mpfr_prec_t)> deriv1;
  std::function<Ball(const Ball&, mpfr_prec_t)> deriv2;
  bool derivative_monotonic = false;
  bool has_d2_range = false;
  Rat lambda2;
  Rat c2;
};

// f(n) = theta * n
PhaseFunction linear_phase(const Rat& theta);

// f(t) = m x / t, with second-derivative metadata for the dyadic block
// (N, 2N]: f'' in [lambda2, 8 lambda2] there with lambda2 = m x / (4 N^3)
PhaseFunction hyperbolic_phase(unsigned m, const Rat& x, uint64_t N);

// Sum_{N < n <= N1} e(f(n)), e(t) = exp(2 pi i t)
struct ExpSumResult {
  Ball re;
  Ball im;
  Ball modulus;
  uint64_t term_count = 0;
};

// Each phase is reduced mod 1 exactly before cos/sin are evaluated, so huge
// rational phases lose no precision.
ExpSumResult exp_sum(const PhaseFunction& f, uint64_t N, uint64_t N1,
                     mpfr_prec_t prec);

// 2 / (pi lambda1); the hypothesis needs lambda1 in (0, 1)
Ball kusmin_landau_bound(const Ball& lambda1, mpfr_prec_t prec);

// 4 / sqrt(pi lambda2); the hypothesis needs lambda2 in (0, 1/pi) and
// f' never an integer on the interval
Ball second_derivative_lemma_bound(const Ball& lambda2, mpfr_prec_t prec);

// (4/sqrt(pi)) (c2 N sqrt(lambda2) + 2 / sqrt(lambda2)); needs N >= 1,
// lambda2 > 0, c2 >= 1
Ball van_der_corput_bound(uint64_t N, const Ball& lambda2, const Ball& c2,
                          mpfr_prec_t prec);

// Randomized soundness sweeps; `count` cases derived from `seed`. The x range
// bounds the drawn x for the hyperbolic families; the sampling mode is
// ignored (cases are parameter tuples, not range points).
ClaimRun check_kusmin_landau(const RangeSpec& range, const PrecisionPolicy& policy);
ClaimRun check_second_deriv(const RangeSpec& range, const PrecisionPolicy& policy);
ClaimRun check_vdc(const RangeSpec& range, const PrecisionPolicy& policy);

}  // namespace smoothdiv
