#include <doctest.h>

#include "smoothdiv/ball.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::encloses_lit;
using testutil::encloses_rat;
using testutil::mid_within;

TEST_CASE("construction and exactness") {
  Ball z(64);
  CHECK(z.is_exact());
  CHECK(z.contains_zero());
  CHECK(Ball::from_si(5, 64).is_exact());
  Ball third = Ball::from_rat(Rat(1, 3), 128);
  CHECK_FALSE(third.is_exact());
  CHECK(encloses_rat(third, Rat(1, 3)));
  CHECK(third.radius_at_most(Rat(Int(1), Int("1000000000000000000000000000000"))));
  CHECK_FALSE(third.radius_at_most(Rat(Int(1), Int("1" + std::string(45, '0')))));
}

TEST_CASE("arithmetic encloses exact images") {
  Ball a = Ball::from_rat(Rat(1, 3), 128);
  Ball b = Ball::from_rat(Rat(1, 6), 128);
  CHECK(encloses_rat(a + b, Rat(1, 2)));
  CHECK(encloses_rat(a - b, Rat(1, 6)));
  CHECK(encloses_rat(a * Ball::from_si(3, 128), Rat(1)));
  CHECK(encloses_rat(a / b, Rat(2)));
  CHECK(encloses_rat(-a, Rat(-1, 3)));
  CHECK(encloses_rat(a + Rat(2, 3), Rat(1)));  // mixed Ball/Rat operators
  CHECK(encloses_rat(Rat(1) - a, Rat(2, 3)));
}

TEST_CASE("division by a zero-straddling ball raises") {
  Ball denom = ball_widen(Ball(64), Ball::from_si(1, 64));  // [-1, 1]
  CHECK_THROWS_AS(Ball::from_si(1, 64) / denom, ball_domain_error);
}

TEST_CASE("elementary functions") {
  CHECK(encloses_rat(ball_sqrt(Ball::from_si(4, 128)), Rat(2)));
  CHECK(encloses_rat(ball_sqr(Ball::from_si(-2, 128)), Rat(4)));
  CHECK(encloses_rat(ball_abs(Ball::from_si(-3, 128)), Rat(3)));
  CHECK(encloses_rat(ball_quartic_root(Ball::from_si(16, 128)), Rat(2)));
  CHECK(mid_within(ball_exp(Ball::from_si(1, 192)),
                   "2.71828182845904523536028747135266249775724709369996",
                   "1e-45"));
  CHECK(encloses_rat(ball_log(Ball::from_si(1, 128)), Rat(0)));
  CHECK(mid_within(ball_log(Ball::from_si(2, 192)),
                   "0.693147180559945309417232121458176568075500134360255",
                   "1e-45"));
  CHECK_THROWS_AS(ball_log(Ball(64)), ball_domain_error);
}

TEST_CASE("ball_mul_2si scales exactly") {
  Ball h = ball_mul_2si(Ball::from_si(3, 64), -1);
  CHECK(h.is_exact());
  CHECK(encloses_rat(h, Rat(3, 2)));
  CHECK(encloses_rat(ball_mul_2si(h, 3), Rat(12)));
}

TEST_CASE("ball_max takes endpoint-wise maxima") {
  Ball a = ball_widen(Ball::from_rat(Rat(3, 2), 128), Ball::from_rat(Rat(1, 2), 128));
  Ball b = Ball::from_si(3, 128);
  Ball m = ball_max(a, b);  // max([1,2], 3) = 3
  CHECK(check_inequality(m, b) == Status::Pass);
  CHECK(check_inequality(b, m) == Status::Pass);

  Ball c = ball_widen(Ball::from_rat(Rat(3, 4), 128), Ball::from_rat(Rat(3, 4), 128));
  Ball m2 = ball_max(a, c);  // max([1,2], [0,1.5]) = [1,2]
  CHECK(encloses_rat(m2, Rat(7, 4)));
  CHECK_FALSE(encloses_rat(m2, Rat(1, 2)));
  CHECK_FALSE(m2.contains_zero());
}

TEST_CASE("check_inequality returns certified verdicts") {
  Ball one = Ball::from_si(1, 64), two = Ball::from_si(2, 64);
  CHECK(check_inequality(one, two) == Status::Pass);
  CHECK(check_inequality(two, one) == Status::Fail);
  Ball wide = ball_widen(one, one);  // [0, 2]
  CHECK(check_inequality(wide, one) == Status::Inconclusive);
  CHECK(ball_margin(one, two).approx() == doctest::Approx(1.0));
  CHECK(ball_margin(two, one).approx() == doctest::Approx(-1.0));
}

TEST_CASE("overlaps detects intersection") {
  Ball a = Ball::from_rat(Rat(1, 3), 128);
  Ball b = Ball::from_rat(Rat(1, 3), 192);
  CHECK(a.overlaps(b));
  CHECK_FALSE(a.overlaps(Ball::from_si(1, 64)));
}

TEST_CASE("ball_sincos_2pi hits exact rational points") {
  Ball s(128), c(128);
  ball_sincos_2pi(Rat(1, 4), 128, s, c);
  CHECK(encloses_rat(s, Rat(1)));
  CHECK(c.contains_zero());
  ball_sincos_2pi(Rat(1, 3), 128, s, c);
  CHECK(encloses_lit(s, "0.866025403784438646763723170752936183471402626905190"));
  CHECK(encloses_rat(c, Rat(-1, 2)));
  CHECK(encloses_rat(ball_sqr(s) + ball_sqr(c), Rat(1)));
  ball_sincos_2pi(Rat(0), 128, s, c);
  CHECK(encloses_rat(s, Rat(0)));
  CHECK(encloses_rat(c, Rat(1)));
}

TEST_CASE("status combinator is worst-of") {
  CHECK(combine(Status::Pass, Status::Pass) == Status::Pass);
  CHECK(combine(Status::Pass, Status::Inconclusive) == Status::Inconclusive);
  CHECK(combine(Status::Inconclusive, Status::Fail) == Status::Fail);
  CHECK(combine(Status::Fail, Status::Pass) == Status::Fail);
}
