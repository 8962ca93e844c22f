#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/sieve.hpp"

namespace smoothdiv {

// Running prefix state at position n:
//   H = Sum_{k<=n} 1/k, A = Sum_{k<=n} log(k)/k (if requested),
//   S = Sum_{k<=n} tau(k)/k and D = Sum_{k<=n} tau(k) (if a sieve is given).
struct PrefixValues {
  uint64_t n = 0;
  Ball H;
  Ball A;
  Ball S;
  int64_t D = 0;
};

struct PrefixRequest {
  uint64_t max_n = 0;
  bool want_A = false;
  const TauSieve* tau = nullptr;  // enables S and D
  mpfr_prec_t prec = 192;
};

using PrefixVisitor = std::function<void(const PrefixValues&)>;

// Visits the requested positions (sorted ascending, unique, in [1, max_n]) with
// certified prefix enclosures.
//
// chunked = true: production path. [1, max_n] splits into fixed 4096-wide
// chunks; chunk partial sums are computed in parallel (OpenMP), then chunks are
// replayed in order to serve the positions. The decomposition depends only on
// max_n, so results are identical for any thread count.
//
// chunked = false: naive single left-to-right fold, kept as the independent
// reference for tests (roundings differ, enclosures must overlap).
void scan_prefix(const PrefixRequest& req, std::span<const uint64_t> positions,
                 const PrefixVisitor& visit, bool chunked = true);

}  // namespace smoothdiv
