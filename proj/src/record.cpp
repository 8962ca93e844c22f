#include "smoothdiv/record.hpp"

#include <json.hpp>

#include <cstring>

namespace smoothdiv {

Status ClaimRun::overall() const {
  Status st = Status::Pass;
  for (const auto& r : records) st = combine(st, r.status);
  return st;
}

VerificationRecord make_record(std::string claim_id, Rat x, Ball lhs, Ball rhs) {
  VerificationRecord rec;
  rec.claim_id = std::move(claim_id);
  rec.x = std::move(x);
  rec.status = check_inequality(lhs, rhs);
  rec.margin = ball_margin(lhs, rhs);
  rec.lhs = std::move(lhs);
  rec.rhs = std::move(rhs);
  return rec;
}

VerificationRecord make_residual_record(std::string claim_id, Rat x,
                                        const Ball& residual,
                                        const Rat& tolerance) {
  VerificationRecord rec;
  rec.claim_id = std::move(claim_id);
  rec.x = std::move(x);
  rec.lhs = residual;
  rec.rhs = Ball(residual.prec());  // exact zero target
  if (!residual.contains_zero()) {
    rec.status = Status::Fail;
  } else if (residual.radius_at_most(tolerance)) {
    rec.status = Status::Pass;
  } else {
    rec.status = Status::Inconclusive;
  }
  // margin = tolerance - radius (room left under the certification tolerance)
  Ball tol = Ball::from_rat(tolerance, 64);
  Ball rad(64);
  {
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_set(t, residual.rad(), MPFR_RNDU);
    rad = Ball::from_midpoint(t, 0);
    mpfr_clear(t);
  }
  rec.margin = tol - rad;
  return rec;
}

std::string render_mpfr(mpfr_srcptr v) {
  if (mpfr_nan_p(v)) return "nan";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v)) return "0";
  mpfr_exp_t exp;
  char* raw = mpfr_get_str(nullptr, &exp, 10, 20, v, MPFR_RNDN);
  std::string digits(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (!digits.empty() && digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  // digits represent 0.digits * 10^exp
  long e10 = long(exp) - 1;
  std::string out = sign + digits.substr(0, 1) + "." + digits.substr(1) + "e";
  out += (e10 < 0 ? "-" : "+");
  long a = e10 < 0 ? -e10 : e10;
  std::string es = std::to_string(a);
  if (es.size() < 2) es.insert(0, "0");
  return out + es;
}

std::string render_rat(const Rat& q) {
  mpfr_t t;
  mpfr_init2(t, 96);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  std::string s = render_mpfr(t);
  mpfr_clear(t);
  return s;
}

void write_csv(std::ostream& os, const ClaimRun& run) {
  os << "claim_id,x,lhs_mid,lhs_rad,rhs_mid,rhs_rad,margin,status\n";
  for (const auto& r : run.records) {
    os << r.claim_id << ',' << render_rat(r.x) << ',' << render_mpfr(r.lhs.mid())
       << ',' << render_mpfr(r.lhs.rad()) << ',' << render_mpfr(r.rhs.mid())
       << ',' << render_mpfr(r.rhs.rad()) << ',' << render_mpfr(r.margin.mid())
       << ',' << to_string(r.status) << '\n';
  }
}

void write_json(std::ostream& os, const ClaimRun& run) {
  nlohmann::json j;
  j["claim_id"] = run.claim_id;
  j["overall"] = to_string(run.overall());
  j["notes"] = run.notes;
  auto& arr = j["records"] = nlohmann::json::array();
  for (const auto& r : run.records) {
    nlohmann::json rec;
    rec["claim_id"] = r.claim_id;
    rec["x"] = render_rat(r.x);
    rec["lhs_mid"] = render_mpfr(r.lhs.mid());
    rec["lhs_rad"] = render_mpfr(r.lhs.rad());
    rec["rhs_mid"] = render_mpfr(r.rhs.mid());
    rec["rhs_rad"] = render_mpfr(r.rhs.rad());
    rec["margin"] = render_mpfr(r.margin.mid());
    rec["status"] = to_string(r.status);
    arr.push_back(std::move(rec));
  }
  os << j.dump(2) << '\n';
}

int exit_code_for(Status overall) {
  switch (overall) {
    case Status::Pass: return 0;
    case Status::Fail: return 1;
    default: return 2;
  }
}

}  // namespace smoothdiv
