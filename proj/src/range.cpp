#include "smoothdiv/range.hpp"

#include <mpfr.h>

#include <algorithm>
#include <random>

namespace smoothdiv {

namespace {

constexpr mpfr_prec_t kSamplePrec = 96;
constexpr uint64_t kMaxEnumeration = 2000000;

struct MpfrVal {
  mpfr_t v;
  MpfrVal() { mpfr_init2(v, kSamplePrec); }
  ~MpfrVal() { mpfr_clear(v); }
};

Rat clamp(Rat x, const Rat& lo, const Rat& hi) {
  if (x < lo) return lo;
  if (x > hi) return hi;
  return x;
}

Int round_to_int(mpfr_srcptr v) {
  Int z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDN);
  return z;
}

}  // namespace

SampleMode parse_mode(const std::string& s) {
  if (s == "all-integers") return SampleMode::AllIntegers;
  if (s == "geometric") return SampleMode::Geometric;
  if (s == "random-rational") return SampleMode::RandomRational;
  throw domain_error("unknown sampling mode '" + s + "'");
}

std::vector<Rat> make_samples(const RangeSpec& spec) {
  if (spec.x_min > spec.x_max) throw domain_error("empty range: x_min > x_max");
  if (sgn(spec.x_min) <= 0) throw domain_error("range requires x_min > 0");
  std::vector<Rat> out;

  if (spec.mode == SampleMode::AllIntegers) {
    Int lo = rat_floor(spec.x_min);
    if (Rat(lo) < spec.x_min) ++lo;  // ceil
    Int hi = rat_floor(spec.x_max);
    if (hi < lo) return out;
    Int span = hi - lo + 1;
    if (span > Int(long(kMaxEnumeration)))
      throw domain_error(
          "all-integers range too large (over 2e6 points); use geometric sampling");
    for (Int n = lo; n <= hi; ++n) out.emplace_back(n);
    return out;
  }

  if (spec.count < 2) throw domain_error("sampled modes require count >= 2");
  MpfrVal lmin, lmax, t, v;
  mpfr_set_q(t.v, spec.x_min.get_mpq_t(), MPFR_RNDN);
  mpfr_log(lmin.v, t.v, MPFR_RNDN);
  mpfr_set_q(t.v, spec.x_max.get_mpq_t(), MPFR_RNDN);
  mpfr_log(lmax.v, t.v, MPFR_RNDN);

  if (spec.mode == SampleMode::Geometric) {
    out.push_back(spec.x_min);
    for (uint64_t i = 1; i + 1 < spec.count; ++i) {
      // t = lmin + i (lmax - lmin) / (count - 1), v = round(exp(t))
      mpfr_sub(t.v, lmax.v, lmin.v, MPFR_RNDN);
      mpfr_mul_ui(t.v, t.v, static_cast<unsigned long>(i), MPFR_RNDN);
      mpfr_div_ui(t.v, t.v, static_cast<unsigned long>(spec.count - 1), MPFR_RNDN);
      mpfr_add(t.v, t.v, lmin.v, MPFR_RNDN);
      mpfr_exp(v.v, t.v, MPFR_RNDN);
      Int z = round_to_int(v.v);
      if (z < 1) z = 1;
      out.push_back(clamp(Rat(z), spec.x_min, spec.x_max));
    }
    out.push_back(spec.x_max);
  } else {
    if (spec.max_denominator < 1)
      throw domain_error("max_denominator >= 1 required");
    std::mt19937_64 eng(spec.seed);
    for (uint64_t i = 0; i < spec.count; ++i) {
      // u in [0,1) from the top 53 bits; value = exp(lmin + u (lmax - lmin))
      uint64_t bits = eng() >> 11;
      mpfr_sub(t.v, lmax.v, lmin.v, MPFR_RNDN);
      mpfr_set_uj(v.v, bits, MPFR_RNDN);
      mpfr_div_2ui(v.v, v.v, 53, MPFR_RNDN);
      mpfr_mul(t.v, t.v, v.v, MPFR_RNDN);
      mpfr_add(t.v, t.v, lmin.v, MPFR_RNDN);
      mpfr_exp(v.v, t.v, MPFR_RNDN);
      uint64_t den = 1 + eng() % spec.max_denominator;
      mpfr_mul_ui(v.v, v.v, static_cast<unsigned long>(den), MPFR_RNDN);
      Int num = round_to_int(v.v);
      if (num < 1) num = 1;
      Rat x(num, Int(long(den)));
      x.canonicalize();
      out.push_back(clamp(std::move(x), spec.x_min, spec.x_max));
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace smoothdiv
