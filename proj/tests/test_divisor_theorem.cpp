#include <doctest.h>

#include <cstdint>
#include <vector>

#include "smoothdiv/constants.hpp"
#include "smoothdiv/divisor_theorem.hpp"
#include "smoothdiv/sieve.hpp"
#include "smoothdiv/summatory.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::mid_within;

TEST_CASE("exact divisor rearrangement residual vanishes") {
  for (const Rat& x :
       {Rat(1), Rat(10), Rat(999), Rat(12345, 7), Rat(4096)}) {
    CHECK(lemma5_exact_residual(x) == 0);
  }
}

TEST_CASE("exact log-weighted rearrangement residual vanishes") {
  for (const Rat& x : {Rat(1), Rat(4), Rat(10), Rat(100), Rat(1999, 2)}) {
    CHECK(lemma6_exact_residual(x) == 0);
  }
}

TEST_CASE("blocked and serial exact scans emit identical streams") {
  struct Row {
    uint64_t x, s;
    int64_t D;
    unsigned long acc_mod, scale_mod;
    int res_sign;
  };
  auto gather = [](bool blocked) {
    std::vector<Row> rows;
    lemma5_exact_scan(1, 40000, blocked, [&](const Lemma5Step& st) {
      rows.push_back({st.x, st.s, st.D,
                      mpz_fdiv_ui(st.acc.get_mpz_t(), 1000003),
                      mpz_fdiv_ui(st.scale.get_mpz_t(), 1000003),
                      mpz_sgn(st.residual.get_mpz_t())});
    });
    return rows;
  };
  auto a = gather(true);
  auto b = gather(false);
  REQUIRE(a.size() == 40000);
  REQUIRE(b.size() == 40000);
  size_t mismatches = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x || a[i].s != b[i].s || a[i].D != b[i].D ||
        a[i].acc_mod != b[i].acc_mod || a[i].scale_mod != b[i].scale_mod ||
        a[i].res_sign != 0 || b[i].res_sign != 0)
      ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(a.front().x == 1);
  CHECK(a.back().x == 40000);
}

TEST_CASE("scan accumulator encodes the psi tail") {
  // at x = 10: Sum psi(10/k) = -7/6, so acc/scale = -7/6 + s/2 = 1/3
  bool seen = false;
  lemma5_exact_scan(10, 10, true, [&](const Lemma5Step& st) {
    seen = true;
    CHECK(st.x == 10);
    CHECK(st.s == 3);
    CHECK(st.D == 27);
    Rat frac(st.acc, st.scale);
    frac.canonicalize();
    CHECK(frac == Rat(1, 3));
    CHECK(st.residual == 0);
  });
  CHECK(seen);
}

TEST_CASE("delta triple at x = 1") {
  mpfr_prec_t prec = 256;
  Ball gamma = const_euler_gamma(prec);
  Ball gamma1 = const_stieltjes_gamma1(prec);
  DeltaTriple t = make_delta_triple(Rat(1), 1, Ball::from_si(1, prec), gamma,
                                    gamma1, prec);
  // Delta(1) = 2 - 2 gamma, delta(1) = 1 - gamma^2 + 2 gamma_1
  Ball expect_Delta = Ball::from_si(2, prec) - ball_mul_2si(gamma, 1);
  Ball expect_delta =
      Ball::from_si(1, prec) - ball_sqr(gamma) + ball_mul_2si(gamma1, 1);
  CHECK(t.Delta.overlaps(expect_Delta));
  CHECK(t.delta.overlaps(expect_delta));
  CHECK(t.r.overlaps(expect_Delta - expect_delta - Rat(1, 4)));
  CHECK(mid_within(t.r, "0.0743782849720064", "1e-12"));
}

TEST_CASE("remainder route reproduces r") {
  mpfr_prec_t prec = 192;
  Ball gamma = const_euler_gamma(prec);
  Ball gamma1 = const_stieltjes_gamma1(prec);
  HyperbolaRequest req;
  req.want_A = true;
  req.want_tau = true;
  req.prec = prec;
  std::vector<Rat> xs = {Rat(4), Rat(10), Rat(100), Rat(12345, 7), Rat(5000)};
  size_t visited = 0;
  hyperbola_pass(xs, req, [&](const HyperbolaParts& p) {
    ++visited;
    DeltaTriple t =
        make_delta_triple(p.x, p.D_floor, p.S_floor, gamma, gamma1, prec);
    Ball other = r_via_remainders(p, gamma, gamma1, prec);
    CHECK(t.r.overlaps(other));
  });
  CHECK(visited == xs.size());
}

TEST_CASE("bound evaluators") {
  // general regime at x = 4: 1/8 + 0.316/2 + 1/256
  Ball g = theorem1_bound(Rat(4), Theorem1Regime::General, 192);
  CHECK(mid_within(g, "0.28690625", "1e-30"));

  // large regime at x = 10^4: log(10^4)/10 + 0.238/100 + 1/640000
  Ball l = theorem1_bound(Rat(10000), Theorem1Regime::Large, 192);
  CHECK(mid_within(l, "0.92341559969761827360719658187", "1e-20"));

  CHECK_THROWS_AS(theorem1_bound(Rat(100), Theorem1Regime::Large, 192),
                  domain_error);
  CHECK_THROWS_AS(theorem1_bound(Rat(1, 2), Theorem1Regime::General, 192),
                  domain_error);
}

TEST_CASE("smoothing polynomial identity at x = 10") {
  mpfr_prec_t prec = 192;
  Ball gamma = const_euler_gamma(prec);
  Ball gamma1 = const_stieltjes_gamma1(prec);
  TauSieve sieve(10);
  Rat S10 = divisor_harmonic_sum_exact(10, sieve);
  DeltaTriple t = make_delta_triple(Rat(10), 27, Ball::from_rat(S10, prec),
                                    gamma, gamma1, prec);
  // Delta - x delta = D - x S - x P(log x)
  Ball log_x = ball_log(Ball::from_si(10, prec));
  Ball rhs = Ball::from_si(27, prec) - Ball::from_rat(S10, prec) * Rat(10) -
             smooth_poly(log_x, gamma, gamma1, prec) * Rat(10);
  Ball lhs = t.Delta - t.delta * Rat(10);
  CHECK(lhs.overlaps(rhs));

  // P'(0) = 1 - 2 gamma
  Ball d0 = smooth_poly_deriv(Ball(prec), gamma, prec);
  CHECK(d0.overlaps(Ball::from_si(1, prec) - ball_mul_2si(gamma, 1)));
}
