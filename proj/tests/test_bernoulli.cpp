#include <doctest.h>

#include "smoothdiv/bernoulli.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::encloses_rat;
using testutil::mid_within;

TEST_CASE("bernoulli numbers, B1 = -1/2 convention") {
  CHECK(bernoulli_number(0) == Rat(1));
  CHECK(bernoulli_number(1) == Rat(-1, 2));
  CHECK(bernoulli_number(2) == Rat(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rat(-1, 30));
  CHECK(bernoulli_number(12) == Rat(-691, 2730));
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(2, Rat(1, 2)) == Rat(-1, 12));
  CHECK(bernoulli_poly(3, Rat(1, 2)) == 0);
  CHECK(bernoulli_poly(3, Rat(1, 4)) == Rat(3, 64));
  // endpoint values agree with the numbers
  CHECK(bernoulli_poly(2, Rat(0)) == Rat(1, 6));
  CHECK(bernoulli_poly(2, Rat(1)) == Rat(1, 6));
  CHECK(bernoulli_poly(3, Rat(0)) == 0);
  CHECK(bernoulli_poly(3, Rat(1)) == 0);
}

TEST_CASE("periodic bernoulli and the psi functions") {
  CHECK(periodic_bernoulli(2, Rat(7, 2)) == Rat(-1, 12));
  CHECK(periodic_bernoulli(3, Rat(-3, 4)) == Rat(3, 64));  // {x} = 1/4
  CHECK(psi_rat(Rat(7, 2)) == 0);
  CHECK(psi_rat(Rat(10)) == Rat(-1, 2));
  CHECK(psi_rat(Rat(10, 3)) == Rat(-1, 6));
  CHECK(psi2_rat(Rat(5)) == 0);
  CHECK(psi2_rat(Rat(7, 2)) == Rat(-1, 8));
  // the antiderivative stays within [-1/8, 0]
  for (int k = 0; k <= 16; ++k) {
    Rat v = psi2_rat(Rat(k) / 16);
    CHECK(v <= 0);
    CHECK(v >= Rat(-1, 8));
  }
}

TEST_CASE("gamma factors") {
  Ball g2 = gamma_factor(2, 128);
  CHECK(encloses_rat(g2, Rat(1, 6)));
  // mathematically exact (= |B_2|), so the enclosure is one rounding wide
  CHECK(g2.radius_at_most(Rat("1/1000000000000000000000000000000")));

  // Gamma_3 = 3 / (2 pi^3)
  Ball g3 = gamma_factor(3, 192);
  CHECK(mid_within(g3, "0.0483773016497992337766330790328", "1e-28"));

  // sqrt(3)/36, the true sup of |B_3({t})|
  Ball s3 = sup_abs_b3(192);
  CHECK(mid_within(s3, "0.048112522432468813709095731708", "1e-20"));

  // the factor dominates the sup but only by about half a percent
  CHECK(check_inequality(s3, g3) == Status::Pass);
  CHECK(check_inequality(g3, s3) == Status::Fail);
}
