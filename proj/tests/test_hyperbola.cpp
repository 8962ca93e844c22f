#include <doctest.h>

#include <cstdint>
#include <vector>

#include "smoothdiv/bernoulli.hpp"
#include "smoothdiv/hyperbola.hpp"
#include "smoothdiv/sieve.hpp"
#include "smoothdiv/summatory.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::encloses_rat;

namespace {

std::vector<HyperbolaParts> run_pass(const std::vector<Rat>& xs,
                                     const HyperbolaRequest& req) {
  std::vector<HyperbolaParts> out;
  hyperbola_pass(xs, req, [&](const HyperbolaParts& p) { out.push_back(p); });
  return out;
}

}  // namespace

TEST_CASE("hyperbola parts at x = 10") {
  HyperbolaRequest req;
  req.want_A = true;
  req.want_tau = true;
  auto got = run_pass({Rat(10)}, req);
  REQUIRE(got.size() == 1);
  const HyperbolaParts& p = got[0];
  CHECK(p.x == Rat(10));
  CHECK(p.s == 3);
  CHECK(p.floor_x == 10);
  CHECK(encloses_rat(p.H_s, Rat(11, 6)));
  CHECK(p.D_floor == 27);
  TauSieve sieve(10);
  CHECK(encloses_rat(p.S_floor, divisor_harmonic_sum_exact(10, sieve)));
  // Sum_{k<=3} H(floor(10/k))/k = H(10) + H(5)/2 + H(3)/3
  Rat inner =
      harmonic_exact(10) + harmonic_exact(5) / 2 + harmonic_exact(3) / 3;
  CHECK(encloses_rat(p.sum_H_over_k, inner));
  CHECK(p.sum_psi == Rat(-7, 6));
}

TEST_CASE("exact psi tail") {
  CHECK(psi_tail_exact(Rat(21, 2), 3) == Rat(-1, 4));

  // agrees with a direct term-by-term loop at a awkward rational point
  Rat x(12345, 7);
  uint64_t s = to_u64(rat_isqrt(x));
  Rat direct(0);
  for (uint64_t k = 1; k <= s; ++k) direct += psi_rat(x / Rat(Int(k)));
  CHECK(psi_tail_exact(x, s) == direct);
}

TEST_CASE("hyperbola pass visits ascending samples in order") {
  HyperbolaRequest req;  // defaults: inner harmonic sum and psi tail only
  std::vector<Rat> xs = {Rat(4), Rat(10), Rat(21, 2), Rat(100)};
  auto got = run_pass(xs, req);
  REQUIRE(got.size() == 4);
  for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].x == xs[i]);
  CHECK(got[0].s == 2);
  CHECK(got[2].s == 3);
  CHECK(got[3].s == 10);
  // psi(4) + psi(2) = -1/2 - 1/2
  CHECK(got[0].sum_psi == Rat(-1));
  CHECK(got[2].sum_psi == Rat(-1, 4));
}
