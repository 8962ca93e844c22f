#include <doctest.h>

#include <cstdint>
#include <vector>

#include "smoothdiv/scan.hpp"
#include "smoothdiv/summatory.hpp"
#include "test_util.hpp"

using namespace smoothdiv;
using testutil::encloses_rat;

namespace {

std::vector<PrefixValues> collect(const PrefixRequest& req,
                                  const std::vector<uint64_t>& pos,
                                  bool chunked) {
  std::vector<PrefixValues> out;
  scan_prefix(
      req, pos, [&](const PrefixValues& v) { out.push_back(v); }, chunked);
  return out;
}

}  // namespace

TEST_CASE("chunked and serial prefix scans agree") {
  TauSieve sieve(10000);
  PrefixRequest req;
  req.max_n = 10000;
  req.want_A = true;
  req.tau = &sieve;
  req.prec = 192;
  std::vector<uint64_t> pos = {1, 5000, 9999, 10000};

  auto a = collect(req, pos, true);
  auto b = collect(req, pos, false);
  REQUIRE(a.size() == 4);
  REQUIRE(b.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(a[i].n == pos[i]);
    CHECK(b[i].n == pos[i]);
    CHECK(a[i].D == b[i].D);
    CHECK(a[i].H.overlaps(b[i].H));
    CHECK(a[i].A.overlaps(b[i].A));
    CHECK(a[i].S.overlaps(b[i].S));
  }
  // exact anchors at n = 1
  CHECK(encloses_rat(a[0].H, Rat(1)));
  CHECK(encloses_rat(a[0].A, Rat(0)));
  CHECK(encloses_rat(a[0].S, Rat(1)));
  CHECK(a[0].D == 1);
}

TEST_CASE("harmonic prefix enclosure contains the exact value") {
  PrefixRequest req;
  req.max_n = 100;
  req.prec = 160;
  std::vector<uint64_t> pos = {100};
  auto got = collect(req, pos, true);
  REQUIRE(got.size() == 1);
  CHECK(encloses_rat(got[0].H, harmonic_exact(100)));
}

TEST_CASE("tau-weighted prefixes enclose the exact sums") {
  TauSieve sieve(50);
  PrefixRequest req;
  req.max_n = 50;
  req.tau = &sieve;
  std::vector<uint64_t> pos = {4, 5, 6, 50};
  auto got = collect(req, pos, true);
  REQUIRE(got.size() == 4);
  CHECK(encloses_rat(got[0].S, Rat(41, 12)));
  CHECK(encloses_rat(got[1].S, Rat(229, 60)));
  CHECK(encloses_rat(got[2].S, Rat(269, 60)));
  CHECK(encloses_rat(got[3].S, divisor_harmonic_sum_exact(50, sieve)));
  CHECK(got[3].D == divisor_sum_u64(50));
}
