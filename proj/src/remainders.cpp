#include "smoothdiv/remainders.hpp"

#include "smoothdiv/bernoulli.hpp"
#include "smoothdiv/constants.hpp"
#include "smoothdiv/summatory.hpp"
#include "claim_util.hpp"

namespace smoothdiv {

Ball r1_from_parts(const Rat& x, const Ball& h_floor, const Ball& log_x,
                   const Ball& gamma, mpfr_prec_t prec) {
  Rat corr = psi_rat(x) / x;  // exact
  return h_floor - log_x - gamma + Ball::from_rat(corr, prec);
}

Ball r1_at_sqrt(const Rat& x, const Ball& h_s, const Ball& log_x,
                const Ball& sqrt_x, const Ball& gamma, mpfr_prec_t prec) {
  // psi(sqrt x)/sqrt x = (sqrt x - s - 1/2)/sqrt x = 1 - (s + 1/2)/sqrt x
  Rat s_half(2 * rat_isqrt(x) + 1);
  s_half /= 2;
  Ball corr = Ball::from_si(1, prec) - s_half / sqrt_x;
  return h_s - ball_mul_2si(log_x, -1) - gamma + corr;
}

Ball r2_from_parts(const Ball& h_floor, const Ball& a_floor, const Ball& log_arg,
                   const Ball& gamma, const Ball& gamma1) {
  return log_arg * h_floor - a_floor - ball_mul_2si(ball_sqr(log_arg), -1) -
         gamma * log_arg + gamma1;
}

Ball r1_remainder(const Rat& x, mpfr_prec_t prec) {
  if (x < 1) throw domain_error("R1 requires x >= 1");
  mpfr_prec_t cp = constants_prec(prec);
  Ball h = Ball::from_rat(harmonic_exact(to_u64(rat_floor(x))), cp);
  Ball lx = ball_log(Ball::from_rat(x, cp));
  return r1_from_parts(x, h, lx, const_euler_gamma(cp), prec);
}

Ball r2_remainder(const Rat& x, mpfr_prec_t prec) {
  if (x < 1) throw domain_error("R2 requires x >= 1");
  mpfr_prec_t cp = constants_prec(prec);
  uint64_t n = to_u64(rat_floor(x));
  Ball h = Ball::from_rat(harmonic_exact(n), cp);
  Ball a(cp);
  for (uint64_t k = 2; k <= n; ++k)
    a = a + ball_log(Ball::from_si(long(k), cp)) / rat_of(k);
  Ball lx = ball_log(Ball::from_rat(x, cp));
  return r2_from_parts(h, a, lx, const_euler_gamma(cp), const_stieltjes_gamma1(cp));
}

namespace {

const char* kR1 = "r1-bound";
const char* kR2 = "r2-bound";
const char* kDiff = "r2-minus-r1";

}  // namespace

ClaimRun check_r1_bound(const RangeSpec& spec, const PrecisionPolicy& pol) {
  detail::require_x_min(spec, 1, kR1);
  Ball gamma = const_euler_gamma(constants_prec(pol.working_bits));
  return detail::run_over_prefixes(
      kR1, spec, pol, false, false,
      [&](const Rat& x, const PrefixValues& pv, mpfr_prec_t p) {
        Ball lx = ball_log(Ball::from_rat(x, p));
        Ball r1 = r1_from_parts(x, pv.H, lx, gamma, p);
        Rat bound = Rat(1, 8) / (x * x);
        return make_record(kR1, x, ball_abs(r1), Ball::from_rat(bound, p));
      });
}

ClaimRun check_r2_bound(const RangeSpec& spec, const PrecisionPolicy& pol) {
  detail::require_x_min(spec, 1, kR2);
  mpfr_prec_t cp = constants_prec(pol.working_bits);
  Ball gamma = const_euler_gamma(cp);
  Ball gamma1 = const_stieltjes_gamma1(cp);
  return detail::run_over_prefixes(
      kR2, spec, pol, true, false,
      [&](const Rat& x, const PrefixValues& pv, mpfr_prec_t p) {
        Ball lx = ball_log(Ball::from_rat(x, p));
        Ball r2 = r2_from_parts(pv.H, pv.A, lx, gamma, gamma1);
        Rat bound = Rat(33, 250) / (x * x);
        return make_record(kR2, x, ball_abs(r2), Ball::from_rat(bound, p));
      });
}

ClaimRun check_r2_minus_r1(const RangeSpec& spec, const PrecisionPolicy& pol) {
  detail::require_x_min(spec, 1, kDiff);
  mpfr_prec_t cp = constants_prec(pol.working_bits);
  Ball gamma = const_euler_gamma(cp);
  Ball gamma1 = const_stieltjes_gamma1(cp);
  return detail::run_over_prefixes(
      kDiff, spec, pol, true, false,
      [&](const Rat& x, const PrefixValues& pv, mpfr_prec_t p) {
        Ball lx = ball_log(Ball::from_rat(x, p));
        Ball r1 = r1_from_parts(x, pv.H, lx, gamma, p);
        Ball r2 = r2_from_parts(pv.H, pv.A, lx, gamma, gamma1);
        Rat bound = Rat(33, 1000) / (x * x * x);
        return make_record(kDiff, x, ball_abs(r2 - r1), Ball::from_rat(bound, p));
      });
}

}  // namespace smoothdiv
