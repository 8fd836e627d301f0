#pragma once

#include <array>
#include <optional>
#include <vector>

#include "octet/rational.hpp"

namespace octet {

// Homogeneous point with coprime integer coordinates, first nonzero
// coordinate positive. Equality is exact.
struct ProjPoint {
  Int x{0}, y{0}, z{0};

  ProjPoint() = default;
  ProjPoint(const Int& px, const Int& py, const Int& pz);
  ProjPoint(const Rat& ax, const Rat& ay);  // affine chart z = 1

  bool operator==(const ProjPoint& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }

  bool is_affine() const { return sgn(z) != 0; }
  Rat ax() const;  // x/z, requires z != 0
  Rat ay() const;
};

// Orientation of an affine triple (representatives normalized to z > 0).
// +1 counterclockwise, 0 collinear, -1 clockwise.
int orient(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// Quadratic form A x^2 + B xy + C y^2 + D xz + E yz + F z^2, coefficients
// coprime integers with canonical sign. `inertia_pos/neg` describe the
// symmetric matrix; the real locus is empty iff the form is definite.
struct Conic {
  std::array<Int, 6> c{};  // A,B,C,D,E,F
  int det_sign = 0;        // sign of det of the symmetric matrix
  int inertia_pos = 0, inertia_neg = 0;
  std::optional<std::array<int, 5>> label;  // defining point indices, if any

  // Value of the quadratic form at p (not side-normalized).
  Int eval(const ProjPoint& p) const;
  // Form coefficients scaled so that the matrix has signature (2,1); the
  // disk component is where the normalized form is negative.
  std::array<Int, 6> normalized() const;
  bool operator==(const Conic& o) const { return c == o.c; }
};

enum class Side { Inside, On, Outside };

// Unique conic through five points (exact 5x5 cofactors of the Veronese
// matrix). Throws DegenerateConic (with the collinear witness) if three of
// the five are collinear.
Conic conic_through(const std::array<ProjPoint, 5>& pts);

// Projective inside/outside with the signature-(2,1) normalization.
// Throws EmptyRealLocus for definite forms.
Side point_conic_side(const Conic& c, const ProjPoint& p);

// Exact 6x6 Veronese determinant test.
bool coconic(const std::array<ProjPoint, 6>& pts);
int coconic_det_sign(const std::array<ProjPoint, 6>& pts);

// Ternary cubic, coefficients in the monomial order
// x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3.
struct CubicForm {
  std::array<Int, 10> c{};

  static constexpr int kMonomials[10][3] = {
      {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
      {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

  void canonicalize();
  bool is_zero() const;
  Int eval(const ProjPoint& p) const;
  Rat eval(const Rat& x, const Rat& y, const Rat& z) const;
  std::array<Int, 10> dx() const;  // coefficients of the partial, same basis padded
  // Partials as ternary quadrics in the Conic coefficient order.
  std::array<Int, 6> partial_quadric(int var) const;  // var: 0=x,1=y,2=z
  std::array<Int, 3> gradient(const ProjPoint& p) const;
  bool operator==(const CubicForm& o) const { return c == o.c; }
};

// Exact determinant of a small matrix (Bareiss).
Int det_int(std::vector<std::vector<Int>> m);

// Inertia (n_plus, n_minus) of a symmetric matrix over Q.
std::pair<int, int> symmetric_inertia(std::vector<std::vector<Rat>> m);

}  // namespace octet
