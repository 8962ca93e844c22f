#include <doctest.h>

#include <string>

#include "smoothdiv/mertens.hpp"
#include "smoothdiv/range.hpp"
#include "test_util.hpp"

using namespace smoothdiv;

namespace {

bool any_note_contains(const ClaimRun& run, const std::string& needle) {
  for (const std::string& n : run.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("sign scan over a short prefix") {
  RangeSpec spec;
  spec.x_max = Rat(1000);
  PrecisionPolicy pol;
  ClaimRun run = check_mertens_sign(spec, pol);
  CHECK(run.overall() == Status::Pass);
  // the note mentions where the sign change would be
  CHECK(any_note_contains(run, "18350"));
  REQUIRE(!run.records.empty());
  const VerificationRecord& first = run.records.front();
  CHECK(first.x == Rat(2));
  CHECK(first.status == Status::Pass);
  // at t = 2: M/t = 0 against m = 1/2
  CHECK(first.margin.approx() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("sign scan reaches the first non-negative gap") {
  RangeSpec spec;
  spec.x_max = Rat(20000);
  PrecisionPolicy pol;
  ClaimRun run = check_mertens_sign(spec, pol);
  CHECK(run.overall() == Status::Pass);
  CHECK(any_note_contains(run, "first non-negative gap at t = 18350"));
}

TEST_CASE("sup ratio comparison over a short range") {
  RangeSpec spec;
  spec.x_min = Rat(94);
  spec.x_max = Rat(2000);
  PrecisionPolicy pol;
  ClaimRun run = check_mertens_ratio(spec, pol);
  CHECK(run.overall() == Status::Pass);
  CHECK(any_note_contains(run, "observed"));
  REQUIRE(!run.records.empty());
  CHECK(run.records.front().x == Rat(94));
}

TEST_CASE("domain guards") {
  PrecisionPolicy pol;
  RangeSpec bad1;
  bad1.x_max = Rat(3, 2);
  CHECK_THROWS_AS(check_mertens_sign(bad1, pol), domain_error);
  RangeSpec bad2;
  bad2.x_max = Rat(80);
  CHECK_THROWS_AS(check_mertens_ratio(bad2, pol), domain_error);
}
