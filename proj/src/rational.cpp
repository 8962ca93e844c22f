#include "smoothdiv/rational.hpp"

namespace smoothdiv {

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat rat_frac(const Rat& x) {
  Rat f = x - Rat(rat_floor(x));
  return f;
}

Int rat_isqrt(const Rat& x) {
  if (sgn(x) < 0) throw domain_error("rat_isqrt: negative argument");
  Int f = rat_floor(x);
  Int s;
  mpz_sqrt(s.get_mpz_t(), f.get_mpz_t());
  return s;
}

Int rat_root_floor(const Rat& x, unsigned a, unsigned b) {
  if (sgn(x) < 0) throw domain_error("rat_root_floor: negative argument");
  if (a == 0 || b == 0) throw domain_error("rat_root_floor: zero exponent");
  Int pb, qb;
  mpz_pow_ui(pb.get_mpz_t(), x.get_num().get_mpz_t(), b);
  mpz_pow_ui(qb.get_mpz_t(), x.get_den().get_mpz_t(), b);
  // initial guess from floor(p^b / q^b), then fix up around it
  Int t;
  mpz_fdiv_q(t.get_mpz_t(), pb.get_mpz_t(), qb.get_mpz_t());
  Int n;
  mpz_root(n.get_mpz_t(), t.get_mpz_t(), a);
  auto ok = [&](const Int& m) {
    Int ma;
    mpz_pow_ui(ma.get_mpz_t(), m.get_mpz_t(), a);
    return ma * qb <= pb;
  };
  while (n > 0 && !ok(n)) --n;
  while (ok(n + 1)) ++n;
  return n;
}

uint64_t to_u64(const Int& z) {
  if (sgn(z) < 0 || !z.fits_ulong_p())
    throw domain_error("to_u64: out of range");
  return mpz_get_ui(z.get_mpz_t());
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw domain_error("parse_rational: empty string");
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || frac_len == 0)
      throw domain_error("parse_rational: bad decimal '" + s + "'");
    Int num(digits, 10);
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
    throw domain_error("parse_rational: bad rational '" + s + "'");
  if (sgn(r.get_den()) == 0)
    throw domain_error("parse_rational: division by zero in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace smoothdiv
