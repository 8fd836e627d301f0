#pragma once

#include <utility>
#include <vector>

#include "octet/rational.hpp"

namespace octet {

// Dense univariate polynomial over Q, c[i] = coefficient of t^i, trimmed.
struct Poly {
  std::vector<Rat> c;

  Poly() = default;
  explicit Poly(Rat k) {
    if (sgn(k) != 0) c = {std::move(k)};
  }
  static Poly var() { return from({Rat(0), Rat(1)}); }
  static Poly from(std::vector<Rat> v) {
    Poly p;
    p.c = std::move(v);
    p.trim();
    return p;
  }

  void trim() {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  int deg() const { return (int)c.size() - 1; }
  const Rat& lead() const { return c.back(); }
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const { return sgn(eval(x)); }

  bool operator==(const Poly& o) const { return c == o.c; }
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rat& k, const Poly& a);
Poly operator-(const Poly& a);

Poly derivative(const Poly& a);
// Field division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Division known to be exact; throws on nonzero remainder.
Poly divexact(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);  // monic gcd
Poly squarefree_part(const Poly& a);
// Multiply by the lcm of denominators and divide by integer content;
// sign normalized to positive leading coefficient if requested.
Poly primitive(const Poly& a, bool normalize_sign = false);

// Sturm machinery. Intervals are open (lo, hi) with
// p(lo) != 0, p(hi) != 0 and exactly one root inside.
struct SturmChain {
  std::vector<Poly> s;
  explicit SturmChain(const Poly& squarefree);
  int variations_at(const Rat& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;
  int count_roots(const Rat& lo, const Rat& hi) const;  // in (lo, hi]
  int count_all_roots() const;
};

struct RootInterval {
  Rat lo, hi;  // open interval, single root of the defining polynomial
};

Rat cauchy_root_bound(const Poly& p);
// Isolating intervals for all real roots of a squarefree polynomial, sorted.
std::vector<RootInterval> isolate_roots(const Poly& squarefree);
// Halve the interval width once (keeps single-root invariant).
void refine_interval(const Poly& squarefree, RootInterval& iv);
void refine_interval_below(const Poly& squarefree, RootInterval& iv, const Rat& width);

// Exact Lagrange interpolation through (x_i, y_i) with distinct x_i.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

// Determinant of a matrix of polynomials (fraction-free Bareiss; division
// steps are exact in Q[t]).
Poly det_poly(std::vector<std::vector<Poly>> m);

// Polynomials in an outer variable y with Poly (inner variable) coefficients.
using PolyInY = std::vector<Poly>;  // index = power of y, trimmed by callers

int degy(const PolyInY& p);
void trimy(PolyInY& p);
PolyInY poly_in_y_derivative(const PolyInY& p);
// Resultant with respect to y (Sylvester determinant), a polynomial in the
// inner variable.
Poly resultant_y(const PolyInY& a, const PolyInY& b);
// Pseudo-remainder chain element: prem(a, b) with deg_y a >= deg_y b.
PolyInY pseudo_rem_y(const PolyInY& a, const PolyInY& b);
Rat eval_poly_in_y(const PolyInY& p, const Rat& x, const Rat& y);  // full evaluation
Poly specialize_inner(const PolyInY& p, const Rat& x);             // -> Poly in y

}  // namespace octet
