#include "smoothdiv/expsums.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "claim_util.hpp"
#include "smoothdiv/constants.hpp"

namespace smoothdiv {

namespace {

// total Sum (N1 - N) across a sweep
constexpr uint64_t kTermBudget = 20000000;

void require_certified_positive(const Ball& v, const char* what) {
  if (v.contains_zero() ||
      check_inequality(Ball(v.prec()), v) != Status::Pass)
    throw domain_error(std::string(what) + " must be certified positive");
}

// linear-uniform x: an integer in [ceil(x_min), floor(x_max)] plus a
// fractional part with denominator max_denominator when it still fits
Rat draw_x(std::mt19937_64& rng, const RangeSpec& spec) {
  Int lo = rat_floor(spec.x_min);
  if (Rat(lo) < spec.x_min) ++lo;
  Int hi = rat_floor(spec.x_max);
  if (hi < lo)
    throw domain_error("sweep x range contains no integer");
  uint64_t span = to_u64(hi - lo);
  Rat x(lo + Int(span ? rng() % (span + 1) : 0));
  uint64_t q = spec.max_denominator ? spec.max_denominator : 1;
  Rat frac(static_cast<unsigned long>(rng() % q), static_cast<unsigned long>(q));
  frac.canonicalize();
  if (x + frac <= spec.x_max) x += frac;
  return x;
}

}  // namespace

PhaseFunction linear_phase(const Rat& theta) {
  PhaseFunction f;
  f.value = [theta](uint64_t n) -> Rat { return theta * Rat(Int(n)); };
  f.deriv1 = [theta](const Ball&, mpfr_prec_t p) { return Ball::from_rat(theta, p); };
  f.deriv2 = [](const Ball&, mpfr_prec_t p) { return Ball(p); };
  f.derivative_monotonic = true;
  return f;
}

PhaseFunction hyperbolic_phase(unsigned m, const Rat& x, uint64_t N) {
  if (m < 1 || x <= 0) throw domain_error("hyperbolic phase needs m >= 1, x > 0");
  if (N < 1) throw domain_error("hyperbolic phase needs N >= 1");
  Rat mx = Rat(long(m)) * x;
  PhaseFunction f;
  f.value = [mx](uint64_t n) -> Rat { return mx / Rat(Int(n)); };
  f.deriv1 = [mx](const Ball& t, mpfr_prec_t p) {
    return -(Ball::from_rat(mx, p) / ball_sqr(t));
  };
  f.deriv2 = [mx](const Ball& t, mpfr_prec_t p) {
    return ball_mul_2si(Ball::from_rat(mx, p), 1) / (t * ball_sqr(t));
  };
  f.derivative_monotonic = true;  // f' = -mx/t^2 increases in t
  f.has_d2_range = true;
  Int n3(static_cast<unsigned long>(N));
  n3 = n3 * n3 * n3;
  f.lambda2 = mx / Rat(Int(4 * n3));
  f.c2 = 8;
  return f;
}

ExpSumResult exp_sum(const PhaseFunction& f, uint64_t N, uint64_t N1,
                     mpfr_prec_t prec) {
  if (N < 1 || N1 <= N) throw domain_error("exp_sum needs 0 < N < N1");
  Ball re(prec), im(prec), s(prec), c(prec);
  for (uint64_t n = N + 1; n <= N1; ++n) {
    Rat ph = rat_frac(f.value(n));  // exact reduction mod 1
    ball_sincos_2pi(ph, prec, s, c);
    re = re + c;
    im = im + s;
  }
  ExpSumResult out;
  out.re = re;
  out.im = im;
  out.modulus = ball_sqrt(ball_sqr(re) + ball_sqr(im));
  out.term_count = N1 - N;
  return out;
}

Ball kusmin_landau_bound(const Ball& lambda1, mpfr_prec_t prec) {
  require_certified_positive(lambda1, "lambda1");
  if (check_inequality(lambda1, Ball::from_si(1, prec)) != Status::Pass)
    throw domain_error("lambda1 must lie in (0, 1)");
  return ball_mul_2si(Ball::from_si(1, prec), 1) /
         (const_pi_ball(prec) * lambda1);
}

Ball second_derivative_lemma_bound(const Ball& lambda2, mpfr_prec_t prec) {
  require_certified_positive(lambda2, "lambda2");
  Ball pi_l2 = const_pi_ball(prec) * lambda2;
  if (check_inequality(pi_l2, Ball::from_si(1, prec)) != Status::Pass)
    throw domain_error("lambda2 must lie in (0, 1/pi)");
  return ball_mul_2si(Ball::from_si(1, prec), 2) / ball_sqrt(pi_l2);
}

Ball van_der_corput_bound(uint64_t N, const Ball& lambda2, const Ball& c2,
                          mpfr_prec_t prec) {
  if (N < 1) throw domain_error("van der Corput bound needs N >= 1");
  require_certified_positive(lambda2, "lambda2");
  if (check_inequality(Ball::from_si(1, prec), c2) != Status::Pass)
    throw domain_error("c2 >= 1 required");
  Ball sq = ball_sqrt(lambda2);
  Ball inner = c2 * Ball::from_si(static_cast<long>(N), prec) * sq +
               ball_mul_2si(Ball::from_si(1, prec) / sq, 1);
  return ball_mul_2si(inner / ball_sqrt(const_pi_ball(prec)), 2);
}

ClaimRun check_kusmin_landau(const RangeSpec& spec, const PrecisionPolicy& pol) {
  ClaimRun run;
  run.claim_id = "kusmin-landau";
  std::mt19937_64 rng(spec.seed);
  struct Case {
    Rat theta, l1;
    uint64_t N, N1;
  };
  std::vector<Case> cases;
  cases.reserve(spec.count);
  uint64_t terms = 0;
  for (uint64_t i = 0; i < spec.count; ++i) {
    uint64_t q = 3 + rng() % 97;
    uint64_t p = 1 + rng() % (q - 1);
    Rat pq(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
    pq.canonicalize();
    Rat theta = Rat(static_cast<unsigned long>(rng() % 5)) + pq;
    Rat l1 = std::min(pq, Rat(Rat(1) - pq));
    uint64_t N = 1 + rng() % 1000;
    uint64_t N1 = N + 1 + rng() % N;
    terms += N1 - N;
    cases.push_back({theta, l1, N, N1});
  }
  if (terms > kTermBudget)
    throw domain_error("kusmin-landau sweep over the term budget; lower --count");

  detail::RecordSink sink(run, cases.size());
  for (const Case& cs : cases) {
    PhaseFunction f = linear_phase(cs.theta);
    sink.push(detail::with_retries(pol, run.claim_id, cs.theta, [&](mpfr_prec_t p) {
      ExpSumResult s = exp_sum(f, cs.N, cs.N1, p);
      return make_record(run.claim_id, cs.theta, s.modulus,
                         kusmin_landau_bound(Ball::from_rat(cs.l1, p), p));
    }));
  }
  sink.finish();
  run.notes.push_back(
      "cases: f(n) = theta n over (N, N1], theta = k + p/q with lambda1 = "
      "min(p/q, 1 - p/q); the x column reports theta; range flags unused");
  return run;
}

ClaimRun check_vdc(const RangeSpec& spec, const PrecisionPolicy& pol) {
  ClaimRun run;
  run.claim_id = "vdc";
  std::mt19937_64 rng(spec.seed);
  struct Case {
    unsigned m;
    Rat x;
    uint64_t N, N1;
  };
  std::vector<Case> cases;
  cases.reserve(spec.count);
  uint64_t terms = 0;
  for (uint64_t i = 0; i < spec.count; ++i) {
    unsigned m = 1 + static_cast<unsigned>(rng() % 20);
    Rat x = draw_x(rng, spec);
    uint64_t N = 1 + rng() % 1000;
    uint64_t N1 = N + 1 + rng() % N;  // stays within the dyadic block (N, 2N]
    terms += N1 - N;
    cases.push_back({m, x, N, N1});
  }
  if (terms > kTermBudget)
    throw domain_error("vdc sweep over the term budget; lower --count");

  detail::RecordSink sink(run, cases.size());
  for (const Case& cs : cases) {
    PhaseFunction f = hyperbolic_phase(cs.m, cs.x, cs.N);
    sink.push(detail::with_retries(pol, run.claim_id, cs.x, [&](mpfr_prec_t p) {
      ExpSumResult s = exp_sum(f, cs.N, cs.N1, p);
      return make_record(run.claim_id, cs.x, s.modulus,
                         van_der_corput_bound(cs.N, Ball::from_rat(f.lambda2, p),
                                              Ball::from_rat(f.c2, p), p));
    }));
  }
  sink.finish();
  run.notes.push_back(
      "cases: f(t) = m x / t over (N, N1] with N1 <= 2N, lambda2 = m x / (4 N^3), "
      "c2 = 8; m <= 20 and x drawn linear-uniform from the range");
  return run;
}

ClaimRun check_second_deriv(const RangeSpec& spec, const PrecisionPolicy& pol) {
  ClaimRun run;
  run.claim_id = "second-deriv";
  std::mt19937_64 rng(spec.seed);
  struct Case {
    unsigned m;
    Rat x;
    uint64_t N, N1;
    Rat l2;
  };
  std::vector<Case> cases;
  cases.reserve(spec.count);
  uint64_t terms = 0, rejected = 0;
  for (uint64_t i = 0; i < spec.count; ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
      unsigned m = 1 + static_cast<unsigned>(rng() % 20);
      Rat x = draw_x(rng, spec);
      Rat mx = Rat(long(m)) * x;
      // N1^3 > 64 m x keeps lambda2 = 2 m x / N1^3 below 1/32 < 1/pi and
      // leaves room for a block on which f' moves by less than 1/2
      Int base = rat_root_floor(64 * mx, 3, 1) + 1;
      uint64_t b = to_u64(base);
      uint64_t N1 = b + rng() % b;
      Int n3(static_cast<unsigned long>(N1));
      n3 = n3 * n3 * n3;
      uint64_t dmax = to_u64(rat_floor(Rat(n3) / (64 * mx)));
      uint64_t dcap = std::min({uint64_t(1000), dmax, N1 / 2});
      if (dcap < 1) {
        ++rejected;
        continue;
      }
      uint64_t block = 1 + rng() % dcap;
      uint64_t N = N1 - block;
      // hypothesis: f'(t) = -m x / t^2 never an integer on [N, N1]
      Rat lo = -mx / Rat(Int(N) * Int(N));
      Rat hi = -mx / Rat(Int(N1) * Int(N1));
      if (Rat(rat_floor(hi)) >= lo) {
        ++rejected;
        continue;
      }
      Rat l2 = 2 * mx / Rat(n3);
      terms += block;
      cases.push_back({m, x, N, N1, l2});
      ok = true;
    }
    if (!ok)
      throw domain_error("second-deriv sweep could not draw an admissible case "
                         "in this x range");
  }
  if (terms > kTermBudget)
    throw domain_error("second-deriv sweep over the term budget; lower --count");

  detail::RecordSink sink(run, cases.size());
  for (const Case& cs : cases) {
    PhaseFunction f = hyperbolic_phase(cs.m, cs.x, cs.N);
    sink.push(detail::with_retries(pol, run.claim_id, cs.x, [&](mpfr_prec_t p) {
      ExpSumResult s = exp_sum(f, cs.N, cs.N1, p);
      return make_record(run.claim_id, cs.x, s.modulus,
                         second_derivative_lemma_bound(Ball::from_rat(cs.l2, p), p));
    }));
  }
  sink.finish();
  run.notes.push_back(
      "cases: f(t) = m x / t on [N, N1] with lambda2 = 2 m x / N1^3 and the "
      "integer-free f' hypothesis checked exactly; " +
      std::to_string(rejected) + " draws rejected");
  return run;
}

}  // namespace smoothdiv
