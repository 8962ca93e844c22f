#include "smoothdiv/scan.hpp"

#include <algorithm>
#include <vector>

namespace smoothdiv {

namespace {

constexpr uint64_t kChunk = 4096;

struct Terms {
  const PrefixRequest& req;

  void add(PrefixValues& acc, uint64_t n) const {
    Rat inv(1, n);
    acc.H = acc.H + Ball::from_rat(inv, req.prec);
    if (req.want_A)
      acc.A = acc.A + ball_log(Ball::from_int(Int(static_cast<unsigned long>(n)),
                                              req.prec)) *
                          Ball::from_rat(inv, req.prec);
    if (req.tau) {
      uint16_t t = req.tau->tau[n];
      Rat tn(t, n);
      tn.canonicalize();
      acc.S = acc.S + Ball::from_rat(tn, req.prec);
      acc.D += t;
    }
  }

  PrefixValues zero() const {
    PrefixValues v;
    v.H = Ball(req.prec);
    v.A = Ball(req.prec);
    v.S = Ball(req.prec);
    return v;
  }
};

void check_positions(const PrefixRequest& req,
                     std::span<const uint64_t> positions) {
  uint64_t prev = 0;
  for (uint64_t p : positions) {
    if (p <= prev || p > req.max_n)
      throw domain_error("scan_prefix: positions must be sorted, unique, in range");
    prev = p;
  }
  if (req.tau && req.tau->limit() < req.max_n)
    throw domain_error("scan_prefix: sieve smaller than max_n");
}

}  // namespace

void scan_prefix(const PrefixRequest& req, std::span<const uint64_t> positions,
                 const PrefixVisitor& visit, bool chunked) {
  check_positions(req, positions);
  Terms terms{req};
  if (req.max_n == 0) return;

  if (!chunked) {
    PrefixValues acc = terms.zero();
    size_t pi = 0;
    for (uint64_t n = 1; n <= req.max_n && pi < positions.size(); ++n) {
      terms.add(acc, n);
      if (n == positions[pi]) {
        acc.n = n;
        visit(acc);
        ++pi;
      }
    }
    return;
  }

  uint64_t nchunks = (req.max_n + kChunk - 1) / kChunk;
  std::vector<PrefixValues> partials(nchunks);
#pragma omp parallel for schedule(dynamic)
  for (int64_t c = 0; c < int64_t(nchunks); ++c) {
    PrefixValues acc = terms.zero();
    uint64_t lo = uint64_t(c) * kChunk + 1;
    uint64_t hi = std::min(req.max_n, (uint64_t(c) + 1) * kChunk);
    for (uint64_t n = lo; n <= hi; ++n) terms.add(acc, n);
    partials[c] = std::move(acc);
  }

  PrefixValues carry = terms.zero();
  size_t pi = 0;
  for (uint64_t c = 0; c < nchunks && pi < positions.size(); ++c) {
    uint64_t lo = c * kChunk + 1;
    uint64_t hi = std::min(req.max_n, (c + 1) * kChunk);
    if (positions[pi] <= hi) {
      // replay this chunk on top of the carried prefix
      PrefixValues acc = carry;
      for (uint64_t n = lo; n <= hi; ++n) {
        terms.add(acc, n);
        if (pi < positions.size() && n == positions[pi]) {
          acc.n = n;
          visit(acc);
          ++pi;
        }
      }
    }
    carry.H = carry.H + partials[c].H;
    if (req.want_A) carry.A = carry.A + partials[c].A;
    if (req.tau) carry.S = carry.S + partials[c].S;
    carry.D += partials[c].D;
  }
}

}  // namespace smoothdiv
