#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/constants.hpp"
#include "smoothdiv/range.hpp"
#include "smoothdiv/rational.hpp"
#include "smoothdiv/record.hpp"
#include "smoothdiv/scan.hpp"
#include "smoothdiv/sieve.hpp"

namespace smoothdiv::detail {

// Largest floor(x_max) a prefix-scanning claim will serve; the scan walks
// every integer up to it.
inline constexpr uint64_t kPrefixScanCap = 4000000;

// Cap on emitted rows per run. Wider scans emit a strided subset plus the
// minimum-margin row; Fail/Inconclusive rows are always emitted.
inline constexpr uint64_t kRecordCap = 4096;

inline void require_x_min(const RangeSpec& spec, long lo, const char* claim) {
  if (spec.x_min < Rat(lo))
    throw domain_error(std::string(claim) + " requires x >= " + std::to_string(lo) +
                       ", got --x-min " + render_rat(spec.x_min));
}

inline void require_scan_cap(const RangeSpec& spec, const char* claim) {
  if (spec.x_max > Rat(long(kPrefixScanCap)))
    throw domain_error(std::string(claim) +
                       " scans divisor/harmonic prefixes up to floor(x); --x-max is capped at " +
                       std::to_string(kPrefixScanCap));
}

struct FloorGroups {
  std::vector<uint64_t> positions;              // sorted unique floors
  std::map<uint64_t, std::vector<Rat>> at;      // floor -> samples sharing it
};

inline FloorGroups group_by_floor(const std::vector<Rat>& xs) {
  FloorGroups g;
  for (const Rat& x : xs) g.at[to_u64(rat_floor(x))].push_back(x);
  g.positions.reserve(g.at.size());
  for (const auto& kv : g.at) g.positions.push_back(kv.first);
  return g;
}

inline std::vector<Rat> samples_or_throw(const RangeSpec& spec) {
  std::vector<Rat> xs = make_samples(spec);
  if (xs.empty()) throw domain_error("no sample points in the requested range");
  return xs;
}

// Rebuilds one record at doubling assembly precision until it stops being
// Inconclusive. Shared ingredients (harmonic prefixes, constants) are already
// computed above the working precision and stay fixed.
template <class F>
VerificationRecord with_retries(const PrecisionPolicy& pol, const std::string& claim_id,
                                const Rat& x, F&& make) {
  mpfr_prec_t p = pol.working_bits;
  for (int attempt = 0;; ++attempt, p *= 2) {
    try {
      VerificationRecord rec = make(p);
      if (rec.status != Status::Inconclusive || attempt >= pol.max_retries) return rec;
    } catch (const ball_domain_error&) {
      if (attempt >= pol.max_retries) {
        VerificationRecord rec;
        rec.claim_id = claim_id;
        rec.x = x;
        return rec;  // default status is Inconclusive
      }
    }
  }
}

// Collects per-sample record groups under the emission cap: Pass samples are
// strided once the expected count exceeds the cap, any sample containing a
// violation is always kept, and the minimum-margin Pass sample is appended so
// the binding point survives. Every sample is still CHECKED; striding only
// limits what is written out.
class RecordSink {
 public:
  RecordSink(ClaimRun& run, uint64_t expected) : run_(run) {
    if (expected > kRecordCap) stride_ = (expected + kRecordCap - 1) / kRecordCap;
  }

  void push(VerificationRecord rec) {
    std::vector<VerificationRecord> group;
    group.push_back(std::move(rec));
    push_group(std::move(group));
  }

  void push_group(std::vector<VerificationRecord> group) {
    uint64_t idx = seen_++;
    Status worst = Status::Pass;
    double lo = 0.0;
    bool first = true;
    for (const VerificationRecord& r : group) {
      worst = combine(worst, r.status);
      double m = r.margin.approx();
      if (first || m < lo) lo = m;
      first = false;
    }
    if (worst != Status::Pass) {
      ++violations_;
      append(std::move(group));
      return;
    }
    if (stride_ > 1 && (!have_min_ || lo < min_margin_)) {
      have_min_ = true;
      min_margin_ = lo;
      min_group_ = group;
      min_idx_ = idx;
    }
    if (idx % stride_ == 0) append(std::move(group));
  }

  void finish() {
    if (stride_ > 1) {
      if (have_min_ && min_idx_ % stride_ != 0) append(std::move(min_group_));
      run_.notes.push_back("checked " + std::to_string(seen_) + " points, " +
                           std::to_string(violations_) + " violations; rows strided 1/" +
                           std::to_string(stride_) + " plus the minimum-margin point");
    }
    std::stable_sort(run_.records.begin(), run_.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                       return a.x < b.x;
                     });
  }

  uint64_t violations() const { return violations_; }
  uint64_t seen() const { return seen_; }

 private:
  void append(std::vector<VerificationRecord> group) {
    for (VerificationRecord& r : group) run_.records.push_back(std::move(r));
  }

  ClaimRun& run_;
  uint64_t stride_ = 1;
  uint64_t seen_ = 0;
  uint64_t violations_ = 0;
  bool have_min_ = false;
  double min_margin_ = 0.0;
  std::vector<VerificationRecord> min_group_;
  uint64_t min_idx_ = 0;
};

// Streams every sample's floor(x) through one prefix scan in ascending order;
// make(x, prefix, p) assembles the record at precision p.
template <class F>
ClaimRun run_over_prefixes(const char* claim, const RangeSpec& spec,
                           const PrecisionPolicy& pol, bool want_A, bool want_tau,
                           F&& make) {
  require_scan_cap(spec, claim);
  ClaimRun run;
  run.claim_id = claim;
  std::vector<Rat> xs = samples_or_throw(spec);
  FloorGroups groups = group_by_floor(xs);
  std::unique_ptr<TauSieve> sieve;
  if (want_tau) sieve = std::make_unique<TauSieve>(groups.positions.back());
  PrefixRequest req;
  req.max_n = groups.positions.back();
  req.want_A = want_A;
  req.tau = sieve.get();
  req.prec = constants_prec(pol.working_bits);
  RecordSink sink(run, xs.size());
  scan_prefix(req, groups.positions, [&](const PrefixValues& pv) {
    for (const Rat& x : groups.at.at(pv.n))
      sink.push(with_retries(pol, claim, x,
                             [&](mpfr_prec_t p) { return make(x, pv, p); }));
  });
  sink.finish();
  return run;
}

}  // namespace smoothdiv::detail
