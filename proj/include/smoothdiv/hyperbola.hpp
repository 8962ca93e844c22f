#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "smoothdiv/ball.hpp"
#include "smoothdiv/rational.hpp"

namespace smoothdiv {

// Per-sample ingredients for the hyperbola-shaped identities. With
// s = floor(sqrt x): prefix enclosures at s and at floor(x), the inner sum
// Sum_{k<=s} H(floor(x/k))/k, and the exact tail Sum_{k<=s} psi(x/k).
struct HyperbolaParts {
  Rat x;
  uint64_t s = 0;
  uint64_t floor_x = 0;
  Ball H_s;
  Ball A_s;             // when want_A
  Ball S_floor;         // when want_tau
  int64_t D_floor = 0;  // when want_tau
  Ball sum_H_over_k;    // when want_sum_H
  Rat sum_psi;          // when want_sum_psi
};

struct HyperbolaRequest {
  bool want_A = false;
  bool want_tau = false;
  bool want_sum_H = true;
  bool want_sum_psi = true;
  mpfr_prec_t prec = 192;
};

// One streaming prefix scan serves every sample's positions floor(x/k).
// Samples must be sorted ascending; they are visited in that order. Work is
// O(sum over samples of sqrt(x)) and is guarded by an explicit budget
// (domain_error suggests sampled modes when a range is too wide). Memory
// stays bounded by internal batching; results are independent of the split.
void hyperbola_pass(const std::vector<Rat>& xs, const HyperbolaRequest& req,
                    const std::function<void(const HyperbolaParts&)>& visit);

// Exact Sum_{k<=s} psi(x/k) accumulated over the common denominator
// den(x)*lcm(1..s), canonicalized once.
Rat psi_tail_exact(const Rat& x, uint64_t s);

}  // namespace smoothdiv
