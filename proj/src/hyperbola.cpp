#include "smoothdiv/hyperbola.hpp"

#include <algorithm>
#include <memory>

#include "smoothdiv/scan.hpp"
#include "smoothdiv/sieve.hpp"

namespace smoothdiv {

namespace {

constexpr uint64_t kWorkBudget = 50000000;  // sum over samples of sqrt(x)
constexpr uint64_t kBatchTuples = 4000000;
constexpr uint64_t kBatchSamples = 50000;

struct PsiTables {
  Int L;                // lcm(1..s_max)
  std::vector<Int> Lk;  // Lk[k] = L/k
  explicit PsiTables(uint64_t s_max) {
    L = 1;
    for (uint64_t k = 2; k <= s_max; ++k)
      mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), (unsigned long)k);
    Lk.resize(s_max + 1);
    for (uint64_t k = 1; k <= s_max; ++k) Lk[k] = L / (unsigned long)k;
  }
};

Rat psi_tail_with(const Rat& x, uint64_t s, const PsiTables& t) {
  // Sum {x/k} = Sum (p mod qk)/(qk) = [Sum (p mod qk)*(L/k)] / (qL)
  const Int& p = x.get_num();
  const Int& q = x.get_den();
  Int acc = 0, qk, r;
  for (uint64_t k = 1; k <= s; ++k) {
    qk = q * (unsigned long)k;
    mpz_fdiv_r(r.get_mpz_t(), p.get_mpz_t(), qk.get_mpz_t());
    mpz_addmul(acc.get_mpz_t(), r.get_mpz_t(), t.Lk[k].get_mpz_t());
  }
  Rat frac_sum(acc, q * t.L);
  frac_sum.canonicalize();
  Rat half_s((unsigned long)s, 2UL);
  half_s.canonicalize();
  return frac_sum - half_s;
}

struct Tuple {
  uint64_t pos;
  uint32_t idx;
  uint32_t k;  // 0 marks the s-position, otherwise the divisor index
};

}  // namespace

Rat psi_tail_exact(const Rat& x, uint64_t s) {
  if (s == 0) return Rat(0);
  PsiTables t(s);
  return psi_tail_with(x, s, t);
}

void hyperbola_pass(const std::vector<Rat>& xs, const HyperbolaRequest& req,
                    const std::function<void(const HyperbolaParts&)>& visit) {
  if (xs.empty()) return;

  const size_t n = xs.size();
  std::vector<uint64_t> s_of(n), floor_of(n);
  uint64_t work = 0, s_gmax = 0, floor_gmax = 0;
  for (size_t i = 0; i < n; ++i) {
    if (xs[i] < 1) throw domain_error("hyperbola pass requires x >= 1");
    s_of[i] = to_u64(rat_isqrt(xs[i]));
    floor_of[i] = to_u64(rat_floor(xs[i]));
    work += s_of[i] + 2;
    s_gmax = std::max(s_gmax, s_of[i]);
    floor_gmax = std::max(floor_gmax, floor_of[i]);
  }
  if (work > kWorkBudget)
    throw domain_error(
        "range too wide for the hyperbola-sum claims (work ~ sum of sqrt(x) "
        "exceeds budget); use --mode geometric or random-rational");

  std::unique_ptr<PsiTables> tables;
  if (req.want_sum_psi) tables = std::make_unique<PsiTables>(s_gmax);
  std::unique_ptr<TauSieve> sieve;
  if (req.want_tau) sieve = std::make_unique<TauSieve>(floor_gmax);

  size_t lo = 0;
  while (lo < n) {
    size_t hi = lo;
    uint64_t batch_work = 0;
    while (hi < n && hi - lo < kBatchSamples) {
      uint64_t w = s_of[hi] + 2;
      if (batch_work + w > kBatchTuples && hi > lo) break;
      batch_work += w;
      ++hi;
    }

    const size_t m = hi - lo;
    std::vector<HyperbolaParts> parts(m);
    std::vector<Tuple> tuples;
    tuples.reserve(batch_work);
    for (size_t i = 0; i < m; ++i) {
      HyperbolaParts& pt = parts[i];
      pt.x = xs[lo + i];
      pt.s = s_of[lo + i];
      pt.floor_x = floor_of[lo + i];
      pt.sum_H_over_k = Ball(req.prec);
      if (req.want_sum_psi) pt.sum_psi = psi_tail_with(pt.x, pt.s, *tables);
      tuples.push_back({pt.s, (uint32_t)i, 0});
      if (req.want_sum_H) {
        const Int& p = pt.x.get_num();
        const Int& q = pt.x.get_den();
        Int qk, fl;
        for (uint64_t k = 1; k <= pt.s; ++k) {
          qk = q * (unsigned long)k;
          mpz_fdiv_q(fl.get_mpz_t(), p.get_mpz_t(), qk.get_mpz_t());
          tuples.push_back({to_u64(fl), (uint32_t)i, (uint32_t)k});
        }
      } else if (req.want_tau) {
        tuples.push_back({pt.floor_x, (uint32_t)i, 1});
      }
    }
    std::sort(tuples.begin(), tuples.end(), [](const Tuple& a, const Tuple& b) {
      if (a.pos != b.pos) return a.pos < b.pos;
      if (a.idx != b.idx) return a.idx < b.idx;
      return a.k < b.k;
    });
    std::vector<uint64_t> positions;
    positions.reserve(tuples.size());
    for (const Tuple& t : tuples)
      if (positions.empty() || positions.back() != t.pos) positions.push_back(t.pos);

    PrefixRequest preq;
    preq.max_n = positions.back();
    preq.want_A = req.want_A;
    preq.tau = sieve.get();
    preq.prec = req.prec;
    size_t ti = 0;
    scan_prefix(preq, positions, [&](const PrefixValues& pv) {
      while (ti < tuples.size() && tuples[ti].pos == pv.n) {
        HyperbolaParts& pt = parts[tuples[ti].idx];
        uint32_t k = tuples[ti].k;
        if (k == 0) {
          pt.H_s = pv.H;
          if (req.want_A) pt.A_s = pv.A;
        } else {
          if (req.want_sum_H) pt.sum_H_over_k = pt.sum_H_over_k + pv.H / rat_of(k);
          if (k == 1 && req.want_tau) {
            pt.S_floor = pv.S;
            pt.D_floor = pv.D;
          }
        }
        ++ti;
      }
    });

    for (size_t i = 0; i < m; ++i) visit(parts[i]);
    lo = hi;
  }
}

}  // namespace smoothdiv
