#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smoothdiv/rational.hpp"

namespace smoothdiv {

enum class SampleMode { AllIntegers, Geometric, RandomRational };

SampleMode parse_mode(const std::string& s);  // "all-integers" | "geometric" | "random-rational"

struct RangeSpec {
  Rat x_min = Rat(1);
  Rat x_max = Rat(1000000);
  SampleMode mode = SampleMode::AllIntegers;
  uint64_t count = 512;           // geometric / random-rational only
  uint64_t max_denominator = 100;  // random-rational only
  uint64_t seed = 1;               // random-rational only
};

// Sorted ascending, deduplicated samples in [x_min, x_max].
// - AllIntegers: every integer in range (guarded against huge enumerations)
// - Geometric: `count` log-equispaced points snapped to integers, exact
//   endpoints included
// - RandomRational: log-uniform values with uniform denominators in
//   [1, max_denominator], reproducible from the seed alone
// Sampling goes through fixed-precision MPFR so the result is identical on
// every platform.
std::vector<Rat> make_samples(const RangeSpec& spec);

}  // namespace smoothdiv
