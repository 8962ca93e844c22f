#include "smoothdiv/claims.hpp"

#include <functional>
#include <map>

#include "smoothdiv/chowla.hpp"
#include "smoothdiv/divisor_theorem.hpp"
#include "smoothdiv/expsums.hpp"
#include "smoothdiv/mertens.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/remainders.hpp"

namespace smoothdiv {

namespace {

ClaimRun selftest(const std::string& id, Status want, const PrecisionPolicy& pol) {
  ClaimRun run;
  run.claim_id = id;
  mpfr_prec_t p = pol.working_bits;
  for (long x = 1; x <= 3; ++x) {
    Ball lhs(p), rhs(p);
    switch (want) {
      case Status::Pass:
        lhs = Ball::from_si(x, p);
        rhs = Ball::from_si(x + 1, p);
        break;
      case Status::Fail:
        lhs = Ball::from_si(x + 1, p);
        rhs = Ball::from_si(x, p);
        break;
      case Status::Inconclusive:
        lhs = ball_widen(Ball::from_si(x, p), Ball::from_si(1, p));
        rhs = Ball::from_si(x, p);
        break;
    }
    run.records.push_back(make_record(id, Rat(x), lhs, rhs));
  }
  run.notes.push_back("synthetic self-test records; range flags unused");
  return run;
}

using Runner = std::function<ClaimRun(const RangeSpec&, const PrecisionPolicy&)>;

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table = {
      {"r1-bound", check_r1_bound},
      {"r2-bound", check_r2_bound},
      {"r2-minus-r1", check_r2_minus_r1},
      {"lemma5", check_lemma5},
      {"lemma6", check_lemma6},
      {"lemma4", check_lemma4},
      {"lemma14", check_lemma14},
      {"prop7", check_prop7},
      {"cor8", check_cor8},
      {"kusmin-landau", check_kusmin_landau},
      {"second-deriv", check_second_deriv},
      {"vdc", check_vdc},
      {"theorem1-general", check_theorem1_general},
      {"theorem1-large", check_theorem1_large},
      {"corollary2", check_corollary2},
      {"transfer-bbr", check_transfer_bbr},
      {"mertens-sign", check_mertens_sign},
      {"mertens-ratio", check_mertens_ratio},
      {"delta-log-2", check_delta_log2},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "r1-bound",      "r2-bound",     "r2-minus-r1",      "lemma5",
      "lemma6",        "lemma4",       "lemma14",          "prop7",
      "cor8",          "kusmin-landau", "second-deriv",    "vdc",
      "theorem1-general", "theorem1-large", "corollary2",  "transfer-bbr",
      "mertens-sign",  "mertens-ratio", "delta-log-2",
  };
  return ids;
}

ClaimRun run_claim(const std::string& id, const RangeSpec& spec,
                   const PrecisionPolicy& pol) {
  if (id == "selftest-pass") return selftest(id, Status::Pass, pol);
  if (id == "selftest-fail") return selftest(id, Status::Fail, pol);
  if (id == "selftest-inconclusive") return selftest(id, Status::Inconclusive, pol);
  auto it = runners().find(id);
  if (it == runners().end()) {
    std::string msg = "unknown claim id '" + id + "'; known ids:";
    for (const std::string& k : claim_ids()) msg += " " + k;
    throw domain_error(msg);
  }
  return it->second(spec, pol);
}

}  // namespace smoothdiv
