// Times the parallel kernels against their serial reference implementations
// and cross-checks that both produce identical (or overlapping) results.
// Usage: bench [limit]   (default 200000)

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "smoothdiv/divisor_theorem.hpp"
#include "smoothdiv/scan.hpp"

using namespace smoothdiv;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct ScanDigest {
  uint64_t checksum = 0;
  uint64_t violations = 0;
};

ScanDigest run_rearrangement(uint64_t limit, bool blocked) {
  ScanDigest d;
  lemma5_exact_scan(1, limit, blocked, [&](const Lemma5Step& step) {
    d.checksum ^= mpz_fdiv_ui(step.acc.get_mpz_t(), 1000000007) + step.x;
    if (step.residual != 0) ++d.violations;
  });
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t limit = argc > 1 ? strtoull(argv[1], nullptr, 10) : 200000;
  if (limit < 16) limit = 16;

  std::printf("divisor-sum rearrangement scan, x = 1..%llu\n",
              static_cast<unsigned long long>(limit));
  auto t0 = std::chrono::steady_clock::now();
  ScanDigest serial = run_rearrangement(limit, false);
  double t_serial = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  ScanDigest blocked = run_rearrangement(limit, true);
  double t_blocked = seconds_since(t0);
  std::printf("  serial    %8.3fs   checksum %016llx   violations %llu\n", t_serial,
              static_cast<unsigned long long>(serial.checksum),
              static_cast<unsigned long long>(serial.violations));
  std::printf("  blocked   %8.3fs   checksum %016llx   violations %llu\n", t_blocked,
              static_cast<unsigned long long>(blocked.checksum),
              static_cast<unsigned long long>(blocked.violations));
  std::printf("  speedup   %.2fx   results %s\n", t_serial / t_blocked,
              serial.checksum == blocked.checksum && serial.violations == blocked.violations
                  ? "identical"
                  : "DIFFER");

  std::printf("harmonic prefix scan, n = 1..%llu\n",
              static_cast<unsigned long long>(limit));
  std::vector<uint64_t> positions = {limit / 4, limit / 2, (3 * limit) / 4, limit};
  PrefixRequest req;
  req.max_n = limit;
  req.want_A = true;
  double h_chunked = 0, h_serial = 0;
  t0 = std::chrono::steady_clock::now();
  scan_prefix(req, positions, [&](const PrefixValues& pv) {
    if (pv.n == limit) h_chunked = pv.H.approx();
  }, true);
  double t_chunked = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  scan_prefix(req, positions, [&](const PrefixValues& pv) {
    if (pv.n == limit) h_serial = pv.H.approx();
  }, false);
  double t_fold = seconds_since(t0);
  std::printf("  serial    %8.3fs   H(limit) ~= %.15g\n", t_fold, h_serial);
  std::printf("  chunked   %8.3fs   H(limit) ~= %.15g\n", t_chunked, h_chunked);
  std::printf("  speedup   %.2fx\n", t_fold / t_chunked);
  return 0;
}
