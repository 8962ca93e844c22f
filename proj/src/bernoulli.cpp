#include "smoothdiv/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "smoothdiv/constants.hpp"

namespace smoothdiv {

namespace {

constexpr unsigned kMaxBernoulli = 64;

const std::vector<Rat>& bernoulli_table() {
  static std::vector<Rat> table;
  static std::once_flag flag;
  std::call_once(flag, [] {
    table.resize(kMaxBernoulli + 1);
    table[0] = 1;
    for (unsigned m = 1; m <= kMaxBernoulli; ++m) {
      Rat acc(0);
      for (unsigned k = 0; k < m; ++k) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
        acc += Rat(binom) * table[k];
      }
      table[m] = -acc / Rat(m + 1);
    }
  });
  return table;
}

}  // namespace

const Rat& bernoulli_number(unsigned m) {
  if (m > kMaxBernoulli) throw domain_error("bernoulli_number: m too large");
  return bernoulli_table()[m];
}

Rat bernoulli_poly(unsigned j, const Rat& t) {
  // B_j(t) = Sum_k C(j,k) B_k t^(j-k), Horner in t
  Rat acc(0);
  for (unsigned k = 0; k <= j; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), j, k);
    acc = acc * t + Rat(binom) * bernoulli_number(k);
  }
  return acc;
}

Rat periodic_bernoulli(unsigned j, const Rat& x) {
  return bernoulli_poly(j, rat_frac(x));
}

Rat psi_rat(const Rat& x) { return rat_frac(x) - Rat(1, 2); }

Rat psi2_rat(const Rat& x) {
  Rat p = psi_rat(x);
  return p * p / 2 - Rat(1, 8);
}

Ball gamma_factor(unsigned j, mpfr_prec_t prec) {
  if (j < 2) throw domain_error("gamma_factor: j >= 2 required");
  if (j % 2 == 0) {
    Rat b = bernoulli_number(j);
    return Ball::from_rat(abs(b), prec);
  }
  Int fact;
  mpz_fac_ui(fact.get_mpz_t(), j);
  Ball two_pi = ball_mul_2si(const_pi_ball(prec), 1);
  Ball denom = two_pi;
  for (unsigned i = 1; i < j; ++i) denom = denom * two_pi;
  return Ball::from_rat(Rat(2 * fact), prec) / denom;
}

Ball sup_abs_b3(mpfr_prec_t prec) {
  return ball_sqrt(Ball::from_si(3, prec)) / Rat(36);
}

}  // namespace smoothdiv
