#include "smoothdiv/constants.hpp"

#include <algorithm>

#include "smoothdiv/bernoulli.hpp"
#include "smoothdiv/summatory.hpp"

namespace smoothdiv {

namespace {

Ball from_const_fn(int (*fn)(mpfr_ptr, mpfr_rnd_t), mpfr_prec_t prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  int tern = fn(t, MPFR_RNDN);
  Ball b = Ball::from_midpoint(t, tern);
  mpfr_clear(t);
  return b;
}

bool upper_below_2exp(const Ball& b, long e) {
  mpfr_t u, tgt;
  mpfr_init2(u, b.prec() + 8);
  mpfr_init2(tgt, 32);
  b.upper(u);
  mpfr_set_ui_2exp(tgt, 1, e, MPFR_RNDN);
  bool ok = mpfr_cmp(u, tgt) <= 0;
  mpfr_clears(u, tgt, (mpfr_ptr) nullptr);
  return ok;
}

Int int_pow(uint64_t base, unsigned e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

Int factorial(unsigned m) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

// (s)_m = s (s+1) ... (s+m-1)
Rat pochhammer(const Rat& s, unsigned m) {
  Rat r(1);
  for (unsigned i = 0; i < m; ++i) r *= s + Rat(i);
  return r;
}

Ball two_pi_pow(unsigned j, mpfr_prec_t prec) {
  Ball two_pi = ball_mul_2si(const_pi_ball(prec), 1);
  Ball r = two_pi;
  for (unsigned i = 1; i < j; ++i) r = r * two_pi;
  return r;
}

}  // namespace

Ball const_pi_ball(mpfr_prec_t prec) { return from_const_fn(mpfr_const_pi, prec); }
Ball const_log2_ball(mpfr_prec_t prec) { return from_const_fn(mpfr_const_log2, prec); }
Ball const_euler_gamma(mpfr_prec_t prec) { return from_const_fn(mpfr_const_euler, prec); }

Ball const_stieltjes_gamma1(mpfr_prec_t prec) {
  mpfr_prec_t wp = prec + 32;
  for (unsigned i = 0; i <= 14; ++i) {
    uint64_t n = uint64_t(256) << i;
    unsigned K = std::min(31u, 12 + 2 * i);
    unsigned J = 2 * K + 2;
    Ball L = ball_log(Ball::from_int(Int(long(n)), wp));
    Rat HJ = harmonic_exact(J);
    // the closed-form tail integral needs log n >= H_J
    if (check_inequality(Ball::from_rat(HJ, wp), L) != Status::Pass) continue;
    // |R| <= 2 zeta(J)/(2pi)^J * Int_n^inf |f^(J)|, f = log t / t, J even;
    // 2 zeta(J) <= 33/10 and the integral is J! ((log n - H_J)/J + 1/J^2) / n^J
    Ball integral = Ball::from_rat(Rat(factorial(J)), wp) *
                    ((L - Ball::from_rat(HJ, wp)) / Rat(J) +
                     Rat(1UL, (unsigned long)J * J)) /
                    Ball::from_int(int_pow(n, J), wp);
    Ball rem = Ball::from_rat(Rat(33, 10), wp) * integral / two_pi_pow(J, wp);
    if (!upper_below_2exp(rem, -(long(prec) + 8))) continue;

    Ball A(wp);
    for (uint64_t k = 2; k <= n; ++k)
      A = A + ball_log(Ball::from_int(Int(long(k)), wp)) / Rat(Int(long(k)));
    Ball result = A - ball_mul_2si(L * L, -1) - L / Rat(2 * Int(long(n)));
    for (unsigned k = 1; k <= K; ++k) {
      Rat coef = bernoulli_number(2 * k) / Rat(2 * k);
      Rat Hodd = harmonic_exact(2 * k - 1);
      result = result + Ball::from_rat(coef, wp) *
                            (L - Ball::from_rat(Hodd, wp)) /
                            Ball::from_int(int_pow(n, 2 * k), wp);
    }
    return ball_widen(result, rem);
  }
  throw ball_domain_error("const_stieltjes_gamma1: precision out of reach");
}

namespace {

// n^(-s) for s = a + 1/2: 1 / (n^a sqrt(n))
Ball recip_half_power(uint64_t n, unsigned a, mpfr_prec_t wp) {
  Ball root = ball_sqrt(Ball::from_int(Int(long(n)), wp));
  return Rat(1) / (Ball::from_int(int_pow(n, a), wp) * root);
}

}  // namespace

Ball zeta_half_odd(unsigned two_s, mpfr_prec_t prec) {
  if (two_s < 3 || two_s % 2 == 0)
    throw domain_error("zeta_half_odd: need odd two_s >= 3");
  unsigned a = (two_s - 1) / 2;  // s = a + 1/2
  Rat s(two_s, 2);
  s.canonicalize();
  mpfr_prec_t wp = prec + 32;
  for (unsigned i = 0; i <= 16; ++i) {
    uint64_t T = uint64_t(16) << i;
    unsigned K = std::min(31u, 7 + 4 * i);
    unsigned J = 2 * K + 2;
    // |R| <= 2 zeta(J)/(2pi)^J * (s)_J T^(1-s-J) / (s+J-1), 2 zeta(J) <= 33/10
    Rat coefR = Rat(33, 10) * pochhammer(s, J) / (s + Rat(J) - 1);
    Ball rootT = ball_sqrt(Ball::from_int(Int(long(T)), wp));
    Ball Tpow = Ball::from_int(int_pow(T, a + J - 1), wp) * rootT;  // T^(s+J-1)
    Ball rem = Ball::from_rat(coefR, wp) / (two_pi_pow(J, wp) * Tpow);
    if (!upper_below_2exp(rem, -(long(prec) + 8))) continue;

    Ball sum(wp);
    for (uint64_t n = 1; n <= T; ++n) sum = sum + recip_half_power(n, a, wp);
    // + T^(1-s)/(s-1) - T^(-s)/2
    Ball Ts1 = Ball::from_int(int_pow(T, a - 1), wp) * rootT;  // T^(s-1)
    Ball result = sum + Rat(1) / (Ball::from_rat(s - 1, wp) * Ts1) -
                  ball_mul_2si(Rat(1) / (Ball::from_int(int_pow(T, a), wp) * rootT), -1);
    for (unsigned k = 1; k <= K; ++k) {
      Rat coef = bernoulli_number(2 * k) / Rat(factorial(2 * k)) *
                 pochhammer(s, 2 * k - 1);
      Ball Tk = Ball::from_int(int_pow(T, a + 2 * k - 1), wp) * rootT;  // T^(s+2k-1)
      result = result + Ball::from_rat(coef, wp) / Tk;
    }
    return ball_widen(result, rem);
  }
  throw ball_domain_error("zeta_half_odd: precision out of reach");
}

Ball zeta_half_odd_series(unsigned two_s, unsigned T, mpfr_prec_t prec) {
  if (two_s < 3 || two_s % 2 == 0)
    throw domain_error("zeta_half_odd_series: need odd two_s >= 3");
  if (T < 1) throw domain_error("zeta_half_odd_series: T >= 1 required");
  unsigned a = (two_s - 1) / 2;
  Rat s(two_s, 2);
  s.canonicalize();
  mpfr_prec_t wp = prec + 16;
  Ball sum(wp);
  for (uint64_t n = 1; n <= T; ++n) sum = sum + recip_half_power(n, a, wp);
  // tail in [0, T^(1-s)/(s-1)]: add half, widen by half
  Ball rootT = ball_sqrt(Ball::from_int(Int(long(T)), wp));
  Ball Ts1 = Ball::from_int(int_pow(T, a - 1), wp) * rootT;
  Ball half_tail = ball_mul_2si(Rat(1) / (Ball::from_rat(s - 1, wp) * Ts1), -1);
  return ball_widen(sum + half_tail, half_tail);
}

}  // namespace smoothdiv
