#include "octet/algebraic.hpp"

namespace octet {

int AlgebraicReal::sign_of(const Poly& p) const {
  if (p.zero()) return 0;
  if (p.deg() == 0) return sgn(p.c[0]);
  Poly g = gcd(p, w);
  if (g.deg() >= 1) {
    // p vanishes at this root iff g does; g's roots are a subset of w's,
    // and w has exactly one root in the interval.
    int sl = g.sign_at(iv.lo), sh = g.sign_at(iv.hi);
    if (sl == 0 || sh == 0 || sl != sh) return 0;
    SturmChain ch(squarefree_part(g));
    if (ch.count_roots(iv.lo, iv.hi) > 0) return 0;
  }
  // p has no root at alpha; shrink until p has constant sign on the interval
  Poly psf = squarefree_part(p);
  SturmChain ch(psf);
  RootInterval local = iv;
  while (true) {
    if (psf.sign_at(local.lo) != 0 && psf.sign_at(local.hi) != 0 &&
        ch.count_roots(local.lo, local.hi) == 0) {
      iv = local;
      return p.sign_at((local.lo + local.hi) / 2);
    }
    refine_interval(w, local);
  }
}

bool AlgebraicReal::is_rational(Rat* value) const {
  if (w.deg() == 1) {
    if (value) *value = -w.c[0] / w.c[1];
    return true;
  }
  // rational root inside the interval?
  // candidates: p/q with q | lead, p | const (restrict to interval): cheap
  // variant: check the midpoint chain of continued fractions of the interval.
  // For our uses the defining polynomial of a rational root always has a
  // linear factor over Q; detect via gcd with candidate linear polys found by
  // rational root theorem.
  Poly pz = primitive(w, true);
  if (sgn(pz.c[0]) == 0) {
    if (cmp(Rat(0)) == 0) {
      if (value) *value = 0;
      return true;
    }
    while (pz.deg() >= 1 && sgn(pz.c[0]) == 0) pz = divexact(pz, Poly::var());
    if (pz.deg() < 1) return false;
  }
  Int lead = pz.lead().get_num();
  Int cst = pz.c[0].get_num();
  std::vector<Int> ps, qs;
  auto divisors = [](Int n) {
    std::vector<Int> d;
    n = abs(n);
    for (Int i = 1; i * i <= n; i++) {
      if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
        d.push_back(i);
        d.push_back(n / i);
      }
    }
    return d;
  };
  // Divisor enumeration is exponential in principle; our constants stay tiny
  // because this is only called on low-degree defining polynomials. Guard
  // anyway.
  if (mpz_sizeinbase(cst.get_mpz_t(), 2) > 64 || mpz_sizeinbase(lead.get_mpz_t(), 2) > 64) {
    // fall back: probe interval endpoints' continued-fraction midpoints
    for (const Rat& cand : cf_convergents((iv.lo + iv.hi) / 2)) {
      if (cand > iv.lo && cand < iv.hi && w.sign_at(cand) == 0) {
        if (value) *value = cand;
        return true;
      }
    }
    return false;
  }
  ps = divisors(cst);
  qs = divisors(lead);
  for (const Int& q : qs)
    for (const Int& p : ps)
      for (int s = -1; s <= 1; s += 2) {
        Rat cand(s * p, q);
        cand.canonicalize();
        if (cand > iv.lo && cand < iv.hi && w.sign_at(cand) == 0) {
          if (value) *value = cand;
          return true;
        }
      }
  return false;
}

int AlgebraicReal::cmp(const Rat& r) const {
  if (w.sign_at(r) == 0) {
    if (r > iv.lo && r < iv.hi) return 0;
    // r is a different root of w
  }
  RootInterval local = iv;
  while (r > local.lo && r < local.hi) refine_interval(w, local);
  iv = local;
  if (r <= local.lo) return 1;
  return -1;
}

int AlgebraicReal::cmp(const AlgebraicReal& o) const {
  // equal iff they share a root of gcd inside both intervals
  Poly g = gcd(w, o.w);
  if (g.deg() >= 1) {
    SturmChain ch(squarefree_part(g));
    Rat lo = std::max(iv.lo, o.iv.lo), hi = std::min(iv.hi, o.iv.hi);
    if (lo < hi && ch.count_roots(lo, hi) > 0) {
      // both numbers are the unique root of their polys in their intervals;
      // a shared root in the overlap makes them equal
      AlgebraicReal a = *this, b = o;
      // confirm the shared root is each number: both intervals contain it
      // (true because each interval has a single root of its own poly and g
      // divides both)
      (void)a;
      (void)b;
      return 0;
    }
  }
  RootInterval A = iv, B = o.iv;
  while (!(A.hi <= B.lo || B.hi <= A.lo)) {
    refine_interval(w, A);
    refine_interval(o.w, B);
  }
  iv = A;
  o.iv = B;
  return A.hi <= B.lo ? -1 : 1;
}

}  // namespace octet
