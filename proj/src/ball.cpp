#include "smoothdiv/ball.hpp"

#include <algorithm>

namespace smoothdiv {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "Pass";
    case Status::Fail: return "Fail";
    default: return "Inconclusive";
  }
}

Status combine(Status a, Status b) {
  if (a == Status::Fail || b == Status::Fail) return Status::Fail;
  if (a == Status::Inconclusive || b == Status::Inconclusive)
    return Status::Inconclusive;
  return Status::Pass;
}

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

struct Scratch {
  mpfr_t r1, r2, r3, r4;
  Scratch() { mpfr_inits2(kRadPrec, r1, r2, r3, r4, (mpfr_ptr) nullptr); }
  ~Scratch() { mpfr_clears(r1, r2, r3, r4, (mpfr_ptr) nullptr); }
  Scratch(const Scratch&) = delete;
};

Scratch& scr() {
  thread_local Scratch s;
  return s;
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_set_zero(mid_, 1);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& o) {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept {
  mpfr_init2(mid_, mpfr_get_prec(o.mid_));
  mpfr_swap(mid_, o.mid_);
  mpfr_init2(rad_, kRadPrec);
  mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
  if (this != &o) {
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Ball::bump(int ternary) {
  if (ternary == 0) return;
  if (mpfr_zero_p(mid_))
    throw ball_domain_error("ball: inexact rounding produced zero midpoint");
  auto& s = scr();
  mpfr_set_ui_2exp(s.r1, 1, mpfr_get_exp(mid_) - prec(), MPFR_RNDU);
  mpfr_add(rad_, rad_, s.r1, MPFR_RNDU);
}

Ball Ball::from_rat(const Rat& q, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_q(b.mid_, q.get_mpq_t(), MPFR_RNDN);
  b.bump(t);
  return b;
}

Ball Ball::from_int(const Int& z, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_z(b.mid_, z.get_mpz_t(), MPFR_RNDN);
  b.bump(t);
  return b;
}

Ball Ball::from_si(long v, mpfr_prec_t prec) {
  Ball b(prec);
  int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
  b.bump(t);
  return b;
}

Ball Ball::from_midpoint(const mpfr_t mid, int ternary) {
  Ball b(mpfr_get_prec(mid));
  mpfr_set(b.mid_, mid, MPFR_RNDN);
  b.bump(ternary);
  return b;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::radius_at_most(const Rat& bound) const {
  return mpfr_cmp_q(rad_, const_cast<mpq_ptr>(bound.get_mpq_t())) <= 0;
}

void Ball::lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

bool Ball::overlaps(const Ball& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec()) + 8;
  mpfr_t a, b;
  mpfr_inits2(p, a, b, (mpfr_ptr) nullptr);
  lower(a);
  o.upper(b);
  bool ok = mpfr_cmp(a, b) <= 0;
  if (ok) {
    o.lower(a);
    upper(b);
    ok = mpfr_cmp(a, b) <= 0;
  }
  mpfr_clears(a, b, (mpfr_ptr) nullptr);
  return ok;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump(t);
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.bump(t);
  return r;
}

Ball operator-(const Ball& a) {
  Ball r(a);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  auto& s = scr();
  mpfr_abs(s.r1, a.mid_, MPFR_RNDU);  // rounds into 64-bit scratch
  mpfr_abs(s.r2, b.mid_, MPFR_RNDU);
  mpfr_mul(s.r3, s.r1, b.rad_, MPFR_RNDU);
  mpfr_mul(s.r4, s.r2, a.rad_, MPFR_RNDU);
  mpfr_add(s.r3, s.r3, s.r4, MPFR_RNDU);
  mpfr_mul(s.r4, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, s.r3, s.r4, MPFR_RNDU);
  r.bump(t);
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (mpfr_zero_p(b.mid_) || mpfr_cmpabs(b.mid_, b.rad_) <= 0)
    throw ball_domain_error("ball: division by ball containing zero");
  Ball r(std::max(a.prec(), b.prec()));
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  auto& s = scr();
  // |a.mid| * b.rad + |b.mid| * a.rad, rounded up
  mpfr_abs(s.r1, a.mid_, MPFR_RNDU);
  mpfr_abs(s.r2, b.mid_, MPFR_RNDU);
  mpfr_mul(s.r1, s.r1, b.rad_, MPFR_RNDU);
  mpfr_mul(s.r2, s.r2, a.rad_, MPFR_RNDU);
  mpfr_add(s.r1, s.r1, s.r2, MPFR_RNDU);
  // |b.mid| * (|b.mid| - b.rad), rounded down
  mpfr_abs(s.r2, b.mid_, MPFR_RNDD);
  mpfr_sub(s.r3, s.r2, b.rad_, MPFR_RNDD);
  if (mpfr_sgn(s.r3) <= 0)
    throw ball_domain_error("ball: division by ball containing zero");
  mpfr_mul(s.r2, s.r2, s.r3, MPFR_RNDD);
  mpfr_div(s.r1, s.r1, s.r2, MPFR_RNDU);
  mpfr_set(r.rad_, s.r1, MPFR_RNDU);
  r.bump(t);
  return r;
}

Ball ball_abs(const Ball& a) {
  Ball r(a);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);  // exact
  return r;
}

Ball ball_mul_2si(const Ball& a, long e) {
  Ball r(a);
  mpfr_mul_2si(r.mid_, r.mid_, e, MPFR_RNDN);  // exact
  mpfr_mul_2si(r.rad_, r.rad_, e, MPFR_RNDU);
  return r;
}

Ball ball_widen(const Ball& a, const Ball& err) {
  Ball r(a);
  auto& s = scr();
  mpfr_abs(s.r1, err.mid_, MPFR_RNDU);
  mpfr_add(s.r1, s.r1, err.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, s.r1, MPFR_RNDU);
  return r;
}

Ball ball_max(const Ball& a, const Ball& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  mpfr_t alo, ahi, blo, bhi;
  mpfr_inits2(p + 8, alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_max(alo, alo, blo, MPFR_RNDD);  // picks one operand, exact
  mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(alo, ahi, p);
  mpfr_clears(alo, ahi, blo, bhi, (mpfr_ptr) nullptr);
  return r;
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  Ball r(prec);
  int t = mpfr_add(r.mid_, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, r.mid_, 1, MPFR_RNDN);  // exact
  mpfr_sub(r.rad_, hi, lo, MPFR_RNDU);
  mpfr_div_2ui(r.rad_, r.rad_, 1, MPFR_RNDU);
  r.bump(t);
  return r;
}

namespace {

// shared scaffolding for the monotone increasing functions below: certified
// input endpoints at a few guard bits above the working precision
struct Endpoints {
  mpfr_t lo, hi;
  explicit Endpoints(const Ball& a) {
    mpfr_inits2(a.prec() + 8, lo, hi, (mpfr_ptr) nullptr);
    a.lower(lo);
    a.upper(hi);
  }
  ~Endpoints() { mpfr_clears(lo, hi, (mpfr_ptr) nullptr); }
};

}  // namespace

namespace {

// single rounded evaluation for exact inputs (one ulp enclosure)
template <class Fn>
Ball eval_exact_point(const Ball& a, Fn fn) {
  mpfr_t t;
  mpfr_init2(t, a.prec());
  int tern = fn(t, a.mid());
  Ball r = Ball::from_midpoint(t, tern);
  mpfr_clear(t);
  return r;
}

}  // namespace

Ball ball_sqrt(const Ball& a) {
  if (a.is_exact()) {
    if (mpfr_sgn(a.mid()) < 0)
      throw ball_domain_error("ball: sqrt of negative ball");
    return eval_exact_point(
        a, [](mpfr_ptr t, mpfr_srcptr m) { return mpfr_sqrt(t, m, MPFR_RNDN); });
  }
  Endpoints e(a);
  if (mpfr_sgn(e.hi) < 0) throw ball_domain_error("ball: sqrt of negative ball");
  if (mpfr_sgn(e.lo) < 0) mpfr_set_zero(e.lo, 1);
  mpfr_t lo, hi;
  mpfr_inits2(a.prec(), lo, hi, (mpfr_ptr) nullptr);
  mpfr_sqrt(lo, e.lo, MPFR_RNDD);
  mpfr_sqrt(hi, e.hi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(lo, hi, a.prec());
  mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
  return r;
}

Ball ball_log(const Ball& a) {
  if (a.is_exact()) {
    if (mpfr_sgn(a.mid()) <= 0)
      throw ball_domain_error("ball: log of ball touching zero");
    return eval_exact_point(
        a, [](mpfr_ptr t, mpfr_srcptr m) { return mpfr_log(t, m, MPFR_RNDN); });
  }
  Endpoints e(a);
  if (mpfr_sgn(e.lo) <= 0)
    throw ball_domain_error("ball: log of ball touching zero");
  mpfr_t lo, hi;
  mpfr_inits2(a.prec(), lo, hi, (mpfr_ptr) nullptr);
  mpfr_log(lo, e.lo, MPFR_RNDD);
  mpfr_log(hi, e.hi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(lo, hi, a.prec());
  mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
  return r;
}

Ball ball_exp(const Ball& a) {
  if (a.is_exact())
    return eval_exact_point(
        a, [](mpfr_ptr t, mpfr_srcptr m) { return mpfr_exp(t, m, MPFR_RNDN); });
  Endpoints e(a);
  mpfr_t lo, hi;
  mpfr_inits2(a.prec(), lo, hi, (mpfr_ptr) nullptr);
  mpfr_exp(lo, e.lo, MPFR_RNDD);
  mpfr_exp(hi, e.hi, MPFR_RNDU);
  Ball r = Ball::from_endpoints(lo, hi, a.prec());
  mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
  return r;
}

Ball ball_sqr(const Ball& a) { return a * a; }

Ball ball_quartic_root(const Ball& a) { return ball_sqrt(ball_sqrt(a)); }

void ball_sincos_2pi(const Rat& theta, mpfr_prec_t prec, Ball& sin_out,
                     Ball& cos_out) {
  Ball pi(prec + 8);
  int t = mpfr_const_pi(pi.mid_, MPFR_RNDN);
  pi.bump(t);
  Ball arg = pi * Ball::from_rat(2 * theta, prec + 8);
  Ball s(prec), c(prec);
  int ts = mpfr_sin(s.mid_, arg.mid_, MPFR_RNDN);
  int tc = mpfr_cos(c.mid_, arg.mid_, MPFR_RNDN);
  // |sin| and |cos| are 1-Lipschitz, so the argument radius carries over
  mpfr_set(s.rad_, arg.rad_, MPFR_RNDU);
  mpfr_set(c.rad_, arg.rad_, MPFR_RNDU);
  s.bump(ts == 0 ? 0 : 1);
  c.bump(tc == 0 ? 0 : 1);
  sin_out = std::move(s);
  cos_out = std::move(c);
}

Status check_inequality(const Ball& lhs, const Ball& rhs) {
  mpfr_prec_t p = std::max(lhs.prec(), rhs.prec()) + 8;
  mpfr_t x, y;
  mpfr_inits2(p, x, y, (mpfr_ptr) nullptr);
  lhs.upper(x);
  rhs.lower(y);
  Status st;
  if (mpfr_cmp(x, y) <= 0) {
    st = Status::Pass;
  } else {
    lhs.lower(x);
    rhs.upper(y);
    st = mpfr_cmp(x, y) > 0 ? Status::Fail : Status::Inconclusive;
  }
  mpfr_clears(x, y, (mpfr_ptr) nullptr);
  return st;
}

Ball ball_margin(const Ball& lhs, const Ball& rhs) {
  mpfr_prec_t p = std::max(lhs.prec(), rhs.prec()) + 8;
  mpfr_t x, y;
  mpfr_inits2(p, x, y, (mpfr_ptr) nullptr);
  lhs.upper(x);
  rhs.lower(y);
  Ball m(64);
  int t = mpfr_sub(m.mid_, y, x, MPFR_RNDN);
  m.bump(t);
  mpfr_clears(x, y, (mpfr_ptr) nullptr);
  return m;
}

}  // namespace smoothdiv
