#pragma once

#include <mpfr.h>

#include <string>

#include "smoothdiv/rational.hpp"

namespace smoothdiv {

enum class Status { Pass, Fail, Inconclusive };
const char* to_string(Status s);
// worst-of combinator: Fail dominates, then Inconclusive
Status combine(Status a, Status b);

struct PrecisionPolicy {
  mpfr_prec_t working_bits = 128;
  int max_retries = 4;  // each retry doubles working_bits
};

// Certified midpoint/radius real: the represented set is [mid - rad, mid + rad]
// and every operation returns a ball containing the exact image of its input
// balls. Midpoints carry the working precision; radii live at 64 bits and are
// always rounded upward.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 64);  // exact zero
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  Ball& operator=(Ball&& o) noexcept;
  ~Ball();

  static Ball from_rat(const Rat& q, mpfr_prec_t prec);
  static Ball from_int(const Int& z, mpfr_prec_t prec);
  static Ball from_si(long v, mpfr_prec_t prec);
  // takes ownership of a midpoint already rounded to nearest; `ternary` is the
  // mpfr ternary value of that rounding
  static Ball from_midpoint(const mpfr_t mid, int ternary);

  mpfr_prec_t prec() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }
  bool is_exact() const { return mpfr_zero_p(rad_); }

  bool contains_zero() const;
  bool radius_at_most(const Rat& bound) const;
  // certified endpoint into `out` (any precision); lower rounds down, upper up
  void lower(mpfr_ptr out) const;
  void upper(mpfr_ptr out) const;
  double approx() const { return mpfr_get_d(mid_, MPFR_RNDN); }

  // true if the two balls intersect (used to cross-check independent
  // evaluations of the same quantity)
  bool overlaps(const Ball& o) const;

  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  friend Ball operator/(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a);

  friend Ball ball_abs(const Ball& a);
  friend Ball ball_sqrt(const Ball& a);  // clamps a negative lower endpoint to 0
  friend Ball ball_log(const Ball& a);
  friend Ball ball_exp(const Ball& a);
  friend Ball ball_mul_2si(const Ball& a, long e);  // exact scaling by 2^e
  // endpoint-wise max: encloses max(s, t) for every s in a, t in b
  friend Ball ball_max(const Ball& a, const Ball& b);
  // widen a's radius by the upper endpoint of |err| (absolute error padding)
  friend Ball ball_widen(const Ball& a, const Ball& err);
  friend void ball_sincos_2pi(const Rat& theta, mpfr_prec_t prec, Ball& sin_out,
                              Ball& cos_out);
  friend Status check_inequality(const Ball& lhs, const Ball& rhs);
  friend Ball ball_margin(const Ball& lhs, const Ball& rhs);

 private:
  mpfr_t mid_;
  mpfr_t rad_;
  void bump(int ternary);  // widen by one ulp of mid_ if the rounding was inexact
  static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);
};

inline Ball operator+(const Ball& a, const Rat& q) { return a + Ball::from_rat(q, a.prec()); }
inline Ball operator+(const Rat& q, const Ball& a) { return a + q; }
inline Ball operator-(const Ball& a, const Rat& q) { return a - Ball::from_rat(q, a.prec()); }
inline Ball operator-(const Rat& q, const Ball& a) { return Ball::from_rat(q, a.prec()) - a; }
inline Ball operator*(const Ball& a, const Rat& q) { return a * Ball::from_rat(q, a.prec()); }
inline Ball operator*(const Rat& q, const Ball& a) { return a * q; }
inline Ball operator/(const Ball& a, const Rat& q) { return a / Ball::from_rat(q, a.prec()); }
inline Ball operator/(const Rat& q, const Ball& a) { return Ball::from_rat(q, a.prec()) / a; }

Ball ball_sqr(const Ball& a);
// x^(1/4) via two square roots (monotone, certified)
Ball ball_quartic_root(const Ball& a);

// Pass  iff upper(lhs) <= lower(rhs), certified
// Fail  iff lower(lhs) >  upper(rhs), certified
// otherwise Inconclusive
Status check_inequality(const Ball& lhs, const Ball& rhs);

// enclosure of lower(rhs) - upper(lhs); positive when the inequality holds with
// room, negative when it fails with room
Ball ball_margin(const Ball& lhs, const Ball& rhs);

// raised when an operation leaves its domain in a way that more precision may
// fix (division by a zero-straddling ball, log of a zero-straddling ball)
struct ball_domain_error : domain_error {
  using domain_error::domain_error;
};

}  // namespace smoothdiv
