#include "octet/rational.hpp"

namespace octet {

std::string rat_to_string(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw Error("BadRational", "empty string");
  Rat v;
  if (v.set_str(s, 10) != 0) throw Error("BadRational", s);
  v.canonicalize();
  if (sgn(Rat(v.get_den())) <= 0) throw Error("BadRational", s);
  return v;
}

static Rat simplest_nonneg(const Rat& lo, const Rat& hi) {
  // 0 <= lo < hi; returns simplest rational in (lo, hi)
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  Rat cand = Rat(fl) + 1;  // smallest integer > lo (when lo not integer, fl+1; when integer, lo+1)
  if (lo == Rat(fl)) cand = lo + 1;
  if (cand < hi) return cand;
  // lo and hi share integer part fl
  Rat flo = lo - Rat(fl), fhi = hi - Rat(fl);
  if (sgn(flo) == 0) {
    // interval is (fl, fl + fhi) with fhi <= 1; pick fl + 1/n for smallest n with 1/n < fhi
    Int n;
    mpz_cdiv_q(n.get_mpz_t(), fhi.get_den().get_mpz_t(), fhi.get_num().get_mpz_t());
    if (Rat(1, n) >= fhi) n = n + 1;
    Rat r = Rat(fl) + Rat(1, n);
    return r;
  }
  Rat inner = simplest_nonneg(1 / fhi, 1 / flo);
  return Rat(fl) + 1 / inner;
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw Error("EmptyInterval", rat_to_string(lo) + ", " + rat_to_string(hi));
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rat(0);
  if (sgn(lo) == 0) {
    Rat r = simplest_nonneg(lo, hi);
    return r;
  }
  if (sgn(hi) == 0) return -simplest_nonneg(-hi, -lo);
  if (sgn(lo) > 0) return simplest_nonneg(lo, hi);
  return -simplest_nonneg(-hi, -lo);
}

std::vector<Rat> cf_convergents(const Rat& v) {
  std::vector<Rat> out;
  Int p0 = 1, q0 = 0;  // h_{-1}/k_{-1}
  Int p1, q1;          // running convergent
  Int num = v.get_num(), den = v.get_den();
  bool first = true;
  while (sgn(den) != 0) {
    Int a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (first) {
      p1 = a;
      q1 = 1;
      first = false;
    } else {
      Int p2 = a * p1 + p0, q2 = a * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
    }
    out.emplace_back(Rat(p1) / Rat(q1));
    num = den;
    den = r;
  }
  return out;
}

}  // namespace octet
