#pragma once

#include <memory>

#include "octet/poly.hpp"

namespace octet {

// Real algebraic number: the unique root of a squarefree defining polynomial
// inside an open isolating interval. Refinement is shared (copy-on-write not
// needed; refining only shrinks the interval).
struct AlgebraicReal {
  Poly w;           // squarefree, w(lo) != 0 != w(hi), exactly one root inside
  mutable RootInterval iv;

  AlgebraicReal() = default;
  AlgebraicReal(Poly defining, RootInterval interval) : w(std::move(defining)), iv(interval) {}

  void refine() const { refine_interval(w, iv); }
  void refine_below(const Rat& width) const { refine_interval_below(w, iv, width); }

  // Exact sign of p at this number. Zero is decided via gcd with the
  // defining polynomial; otherwise the interval is refined until the
  // Sturm count of p on it is zero.
  int sign_of(const Poly& p) const;

  bool is_rational(Rat* value = nullptr) const;  // true iff the root is rational

  // -1, 0, +1 comparison with a rational.
  int cmp(const Rat& r) const;
  // Total order between two algebraic numbers (possibly different defining polys).
  int cmp(const AlgebraicReal& o) const;

  // Approximate value (midpoint after refinement), for reporting only.
  Rat approx(const Rat& width) const {
    refine_below(width);
    return (iv.lo + iv.hi) / 2;
  }
};

}  // namespace octet
