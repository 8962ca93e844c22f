#include <doctest.h>

#include "smoothdiv/constants.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::encloses_lit;
using testutil::mid_within;

TEST_CASE("pi and log 2") {
  CHECK(mid_within(const_pi_ball(192),
                   "3.14159265358979323846264338327950288419716939937511", "1e-48"));
  CHECK(mid_within(const_log2_ball(192),
                   "0.693147180559945309417232121458176568075500134360255", "1e-48"));
}

TEST_CASE("Euler-Mascheroni constant encloses the reference digits") {
  Ball g = const_euler_gamma(192);
  CHECK(encloses_lit(
      g, "0.577215664901532860606512090082402431042159335939923598805767"));
  CHECK(g.radius_at_most(Rat(Int(1), Int("1" + std::string(50, '0')))));
}

TEST_CASE("first Stieltjes constant matches the reference digits") {
  Ball g1 = const_stieltjes_gamma1(192);
  CHECK(mid_within(
      g1, "-0.0728158454836767248605863758749013191377363383343379525990066",
      "1e-50"));
  CHECK(g1.radius_at_most(Rat(Int(1), Int("1" + std::string(45, '0')))));
}

TEST_CASE("zeta at half-odd integers") {
  CHECK(mid_within(zeta_half_odd(3, 192),
                   "2.6123753486854883433485675679240716305708006524001", "1e-45"));
  CHECK(mid_within(zeta_half_odd(5, 192),
                   "1.341487257250917179756769693348612136623037629506", "1e-44"));
  CHECK(mid_within(zeta_half_odd(7, 192),
                   "1.1267338673170566464278124918682770510289720523145", "1e-25"));
}

TEST_CASE("sharp zeta agrees with the plain truncated series") {
  for (unsigned two_s : {3u, 5u}) {
    Ball sharp = zeta_half_odd(two_s, 160);
    Ball plain = zeta_half_odd_series(two_s, 4000, 160);
    CHECK(sharp.overlaps(plain));
  }
}

TEST_CASE("constants_prec keeps headroom above the working precision") {
  CHECK(constants_prec(128) == 192);
  CHECK(constants_prec(192) == 256);
  CHECK(constants_prec(64) == 192);
}
