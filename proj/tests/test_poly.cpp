#include <iostream>
#include "doctest.h"
#include "octet/algebraic.hpp"
#include "octet/poly.hpp"

using namespace octet;

static Poly P(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly::from(v);
}

TEST_CASE("polynomial arithmetic") {
  Poly a = P({1, 2, 1});   // (1+t)^2
  Poly b = P({-1, 1});     // t-1
  CHECK((a * b) == P({-1, -1, 1, 1}));
  CHECK(divexact(a * b, b) == a);
  auto [q, r] = divmod(P({1, 0, 0, 1}), P({1, 1}));
  CHECK(r.zero());
  CHECK(q == P({1, -1, 1}));
}

TEST_CASE("gcd and squarefree") {
  Poly a = P({1, 2, 1});  // (t+1)^2
  Poly b = P({1, 1});
  CHECK(gcd(a, b) == P({1, 1}));
  Poly sf = squarefree_part(a * a * b);
  CHECK(sf.deg() == 1);
}

TEST_CASE("sturm isolation") {
  // (t-1)(t-2)(t+3) = t^3 - 7t + 6
  Poly p = P({6, -7, 0, 1});
  auto roots = isolate_roots(p);
  REQUIRE(roots.size() == 3);
  AlgebraicReal r0(p, roots[0]), r1(p, roots[1]), r2(p, roots[2]);
  CHECK(r0.cmp(Rat(-3)) == 0);
  CHECK(r1.cmp(Rat(1)) == 0);
  CHECK(r2.cmp(Rat(2)) == 0);
}

TEST_CASE("algebraic sign_of") {
  // alpha = sqrt(2)
  Poly w = P({-2, 0, 1});
  auto roots = isolate_roots(w);
  REQUIRE(roots.size() == 2);
  AlgebraicReal a(w, roots[1]);  // positive root
  CHECK(a.cmp(Rat(1)) > 0);
  CHECK(a.cmp(Rat(2)) < 0);
  CHECK(a.sign_of(P({-2, 0, 1})) == 0);
  CHECK(a.sign_of(P({0, 1})) > 0);        // t > 0
  CHECK(a.sign_of(P({-3, 0, 1})) < 0);    // t^2 - 3 < 0 at sqrt(2)
  CHECK(a.sign_of(P({-1, 0, 1})) > 0);    // t^2 - 1 > 0
  Rat v;
  CHECK(!a.is_rational(&v));
  AlgebraicReal half(P({-1, 2}), RootInterval{Rat(0), Rat(1)});
  CHECK(half.is_rational(&v));
  CHECK(v == Rat(1, 2));
}

TEST_CASE("resultant of bivariate polys") {
  // Res_y(y^2 - x, y - x) = x^2 - x
  PolyInY a = {Poly::from({Rat(0), Rat(-1)}), Poly(), Poly(Rat(1))};
  PolyInY b = {Poly::from({Rat(0), Rat(-1)}), Poly(Rat(1))};
  Poly r = resultant_y(a, b);
  CHECK(r == P({0, -1, 1}));
}

TEST_CASE("interpolation") {
  std::vector<Rat> xs = {Rat(0), Rat(1), Rat(2), Rat(-1)};
  Poly p = P({3, -2, 0, 1});
  std::vector<Rat> ys;
  for (auto& x : xs) ys.push_back(p.eval(x));
  CHECK(interpolate(xs, ys) == p);
}

TEST_CASE("simplest rational in interval") {
  CHECK(simplest_rational_between(Rat(1, 3), Rat(1, 2)) == Rat(2, 5));
  CHECK(simplest_rational_between(Rat(-1), Rat(1)) == Rat(0));
  CHECK(simplest_rational_between(Rat(5, 2), Rat(7, 2)) == Rat(3));
  CHECK(simplest_rational_between(Rat(17, 5), Rat(18, 5)) == Rat(7, 2));
  Rat s = simplest_rational_between(Rat(355, 113), Rat(377, 120));
  CHECK(s > Rat(355, 113));
  CHECK(s < Rat(377, 120));
}
