#include "smoothdiv/chowla.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "claim_util.hpp"
#include "smoothdiv/bernoulli.hpp"
#include "smoothdiv/constants.hpp"

namespace smoothdiv {

namespace {

// total Sum over samples of the cutoff floor(x^(1/alpha))
constexpr uint64_t kGWorkBudget = 200000000;
// per-point cutoff cap: the multiplier table holds floor(x^(1/alpha)) entries
// of size ~ j * lcm(1..cutoff)
constexpr uint64_t kGCutoffCap = 12000;

uint64_t g_cutoff(const GParams& p, const Rat& x) {
  return to_u64(rat_root_floor(x, static_cast<unsigned>(p.alpha.get_num().get_ui()),
                               static_cast<unsigned>(p.alpha.get_den().get_ui())));
}

// Per-j accumulation tables: with L = lcm(1..m_max),
//   G * scale_j(q) = Sum_{n<=cutoff} w_n * n^beta * (L/n)^j
// where scale_2(q) = 6 (qL)^2, scale_3(q) = 2 (qL)^3 and w_n is the integer
// Bernoulli numerator at r = num(x) mod (q n):
//   j=2: w = 6 r (r - qn) + (qn)^2,  j=3: w = r (r - qn) (2r - qn).
struct GTables {
  uint64_t m_max;
  Int L;
  std::vector<Int> pw;  // pw[n] = (L/n)^j
  GTables(uint64_t m, unsigned j) : m_max(m), L(1), pw(m + 1) {
    for (uint64_t k = 2; k <= m; ++k)
      mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(k));
    Int ln;
    for (uint64_t n = 1; n <= m; ++n) {
      ln = L / static_cast<unsigned long>(n);
      mpz_pow_ui(pw[n].get_mpz_t(), ln.get_mpz_t(), j);
    }
  }
};

Rat g_sum_with(const GParams& p, const Rat& x, const GTables& t) {
  uint64_t m = g_cutoff(p, x);
  const Int& num = x.get_num();
  const Int& q = x.get_den();
  Int acc = 0, qn, r, w, u;
  for (uint64_t n = 1; n <= m; ++n) {
    mpz_mul_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), qn.get_mpz_t());
    u = r - qn;
    if (p.j == 2) {
      w = 6 * r * u + qn * qn;
    } else {
      w = r * u * (2 * r - qn);
    }
    if (p.beta == 1)
      mpz_mul_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n));
    else if (p.beta == 2)
      mpz_mul_ui(w.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n * n));
    mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), t.pw[n].get_mpz_t());
  }
  Int qL = q * t.L;
  Int den;
  mpz_pow_ui(den.get_mpz_t(), qL.get_mpz_t(), p.j);
  den *= (p.j == 2) ? 6 : 2;
  Rat res(acc, den);
  res.canonicalize();
  return res;
}

void require_g_params(const GParams& p) {
  if (p.j != 2 && p.j != 3)
    throw domain_error("exact Chowla-Walum sums implemented for j in {2, 3}");
  if (p.beta > 2) throw domain_error("beta in {0, 1, 2} supported");
  if (p.alpha <= 1) throw domain_error("alpha > 1 required");
  if (!p.alpha.get_num().fits_ulong_p() || !p.alpha.get_den().fits_ulong_p())
    throw domain_error("alpha must be a small rational");
}

}  // namespace

Rat g_sum(const GParams& p, const Rat& x) {
  require_g_params(p);
  if (x <= 1) throw domain_error("g_sum needs x > 1");
  uint64_t m = g_cutoff(p, x);
  if (m > kGCutoffCap)
    throw domain_error("cutoff x^(1/alpha) exceeds " + std::to_string(kGCutoffCap));
  GTables t(m, p.j);
  return g_sum_with(p, x, t);
}

Ball prop_main_bound(const GParams& p, const Rat& x, mpfr_prec_t prec) {
  require_g_params(p);
  if (p.alpha >= 3) throw domain_error("main bound needs 1 < alpha < 3");
  if (x < 1) throw domain_error("main bound needs x >= 1");
  Ball lx = ball_log(Ball::from_rat(x, prec));
  auto powx = [&](const Rat& e) { return ball_exp(Ball::from_rat(e, prec) * lx); };
  Rat two_alpha = 2 * p.alpha;
  Rat e1 = Rat(2 * long(p.beta) - 1) / two_alpha + Rat(1, 2);
  Rat e2 = Rat(2 * long(p.beta) + 3) / two_alpha - Rat(1, 2);
  Ball z1 = zeta_half_odd(2 * p.j - 1, prec);
  Ball z2 = zeta_half_odd(2 * p.j + 1, prec);
  Rat lcoef = (Rat(3) - p.alpha) / (two_alpha * Rat(long(p.beta) + 1));
  Ball lfac = Ball::from_rat(lcoef, prec) * lx / const_log2_ball(prec) + Rat(1);
  return ball_mul_2si(gamma_factor(p.j, prec), 2) *
         ((z1 + Rat(1, 4)) * powx(e1) + z2 * powx(e2)) * lfac;
}

Ball trivial_bound(const GParams& p, const Rat& x, mpfr_prec_t prec) {
  require_g_params(p);
  if (x < 1) throw domain_error("trivial bound needs x >= 1");
  Ball lx = ball_log(Ball::from_rat(x, prec));
  Rat e = Rat(long(p.beta) + 1) / p.alpha;
  return gamma_factor(p.j, prec) * ball_exp(Ball::from_rat(e, prec) * lx);
}

ClaimRun check_prop7(const RangeSpec& spec, const PrecisionPolicy& pol) {
  detail::require_x_min(spec, 2, "prop7");
  std::vector<Rat> xs = detail::samples_or_throw(spec);
  ClaimRun run;
  run.claim_id = "prop7";

  // the fixed parameter grid, one combination per sample
  std::vector<GParams> grid;
  for (const auto& [a, b] : std::array<std::pair<int, int>, 3>{{{3, 2}, {2, 1}, {5, 2}}})
    for (unsigned beta = 0; beta <= 2; ++beta)
      for (unsigned j = 2; j <= 3; ++j) {
        Rat alpha(a, b);
        alpha.canonicalize();
        grid.push_back({alpha, beta, j});
      }

  uint64_t work = 0, m2 = 1, m3 = 1;
  std::vector<uint64_t> cut(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    const GParams& p = grid[i % grid.size()];
    cut[i] = g_cutoff(p, xs[i]);
    work += cut[i];
    (p.j == 2 ? m2 : m3) = std::max(p.j == 2 ? m2 : m3, cut[i]);
  }
  if (std::max(m2, m3) > kGCutoffCap)
    throw domain_error("prop7 cutoff x^(1/alpha) exceeds " +
                       std::to_string(kGCutoffCap) + "; lower --x-max");
  if (work > kGWorkBudget)
    throw domain_error("prop7 exact-sum work over budget; use geometric or "
                       "random-rational sampling or a narrower range");

  GTables t2(m2, 2), t3(m3, 3);
  mpfr_prec_t cprec = constants_prec(pol.working_bits);
  detail::RecordSink sink(run, xs.size());
  for (size_t i = 0; i < xs.size(); ++i) {
    const Rat& x = xs[i];
    const GParams& p = grid[i % grid.size()];
    Rat g = g_sum_with(p, x, p.j == 2 ? t2 : t3);
    Rat ag = abs(g);
    std::vector<VerificationRecord> group;
    group.push_back(detail::with_retries(pol, run.claim_id, x, [&](mpfr_prec_t wp) {
      return make_record(run.claim_id, x, Ball::from_rat(ag, wp),
                         prop_main_bound(p, x, wp > cprec ? wp : cprec));
    }));
    group.push_back(detail::with_retries(pol, run.claim_id, x, [&](mpfr_prec_t wp) {
      return make_record(run.claim_id, x, Ball::from_rat(ag, wp),
                         trivial_bound(p, x, wp > cprec ? wp : cprec));
    }));
    sink.push_group(std::move(group));
  }
  sink.finish();
  run.notes.push_back("per sample: |G_{alpha,beta,j}| vs the main bound, then vs "
                      "the trivial bound; grid of 18 (alpha, beta, j) combinations "
                      "cycled in sample order");
  return run;
}

ClaimRun check_cor8(const RangeSpec& spec, const PrecisionPolicy& pol) {
  detail::require_x_min(spec, 300, "cor8");
  std::vector<Rat> xs = detail::samples_or_throw(spec);
  ClaimRun run;
  run.claim_id = "cor8";

  GParams p;
  p.alpha = 2;
  p.beta = 1;
  p.j = 2;
  uint64_t work = 0, m_max = 1;
  for (const Rat& x : xs) {
    uint64_t m = to_u64(rat_isqrt(x));
    work += m;
    m_max = std::max(m_max, m);
  }
  if (m_max > kGCutoffCap)
    throw domain_error("cor8 cutoff sqrt(x) exceeds " + std::to_string(kGCutoffCap) +
                       "; lower --x-max");
  if (work > kGWorkBudget)
    throw domain_error("cor8 exact-sum work over budget; use geometric or "
                       "random-rational sampling or a narrower range");

  GTables tables(m_max, 2);
  mpfr_prec_t cprec = constants_prec(pol.working_bits);
  Ball log2b = const_log2_ball(cprec);
  detail::RecordSink sink(run, xs.size());
  for (const Rat& x : xs) {
    Rat ag = abs(g_sum_with(p, x, tables));
    std::vector<VerificationRecord> group;
    group.push_back(detail::with_retries(pol, run.claim_id, x, [&](mpfr_prec_t wp) {
      Ball xb = Ball::from_rat(x, wp);
      Ball x34 = ball_sqrt(xb) * ball_quartic_root(xb);
      return make_record(run.claim_id, x, Ball::from_rat(ag, wp),
                         x34 * ball_log(xb));
    }));
    group.push_back(detail::with_retries(pol, run.claim_id, x, [&](mpfr_prec_t wp) {
      Ball xb = Ball::from_rat(x, wp);
      Ball x34 = ball_sqrt(xb) * ball_quartic_root(xb);
      Ball rhs = Rat(281, 100) * x34 *
                 (Rat(1) + ball_log(xb) / ball_mul_2si(log2b, 3));
      return make_record(run.claim_id, x, Ball::from_rat(ag, wp), rhs);
    }));
    sink.push_group(std::move(group));
  }
  sink.finish();
  {
    Ball c1 = ball_mul_2si(gamma_factor(2, cprec), 2) *
              (zeta_half_odd(3, cprec) + Rat(1, 4));
    Ball c2 = ball_mul_2si(gamma_factor(2, cprec), 2) * zeta_half_odd(5, cprec);
    run.notes.push_back("coefficients: 4 Gamma_2 (zeta(3/2) + 1/4) ~= " +
                        std::to_string(c1.approx()) + ", 4 Gamma_2 zeta(5/2) ~= " +
                        std::to_string(c2.approx()));
    run.notes.push_back("per sample: |G_{2,1,2}| vs x^(3/4) log x, then vs the "
                        "intermediate 2.81 x^(3/4) (1 + log x / (8 log 2))");
  }
  return run;
}

}  // namespace smoothdiv
