#include "octet/geometry.hpp"

#include <algorithm>

namespace octet {

static void canonicalize_triple(Int* v, int n) {
  Int g = 0;
  for (int i = 0; i < n; i++) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
  if (sgn(g) == 0) return;
  for (int i = 0; i < n; i++) v[i] /= g;
  for (int i = 0; i < n; i++) {
    if (sgn(v[i]) != 0) {
      if (sgn(v[i]) < 0)
        for (int j = i; j < n; j++) v[j] = -v[j];
      break;
    }
  }
}

ProjPoint::ProjPoint(const Int& px, const Int& py, const Int& pz) : x(px), y(py), z(pz) {
  if (sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0) throw Error("ZeroPoint", "all coordinates zero");
  Int v[3] = {x, y, z};
  canonicalize_triple(v, 3);
  x = v[0];
  y = v[1];
  z = v[2];
}

ProjPoint::ProjPoint(const Rat& ax, const Rat& ay) {
  Int dx = ax.get_den(), dy = ay.get_den();
  Int l;
  mpz_lcm(l.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  Int v[3];
  v[0] = ax.get_num() * (l / dx);
  v[1] = ay.get_num() * (l / dy);
  v[2] = l;
  canonicalize_triple(v, 3);
  x = v[0];
  y = v[1];
  z = v[2];
}

Rat ProjPoint::ax() const {
  if (sgn(z) == 0) throw Error("PointAtInfinity", "no affine representative");
  Rat r(x, z);
  r.canonicalize();
  return r;
}

Rat ProjPoint::ay() const {
  if (sgn(z) == 0) throw Error("PointAtInfinity", "no affine representative");
  Rat r(y, z);
  r.canonicalize();
  return r;
}

int orient(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  // Normalize representatives to z >= 0 so the sign matches the affine
  // cross product when all three are affine.
  auto row = [](const ProjPoint& p, Int* r) {
    int s = sgn(p.z) < 0 ? -1 : 1;
    r[0] = s * p.x;
    r[1] = s * p.y;
    r[2] = s * p.z;
  };
  Int m[3][3];
  row(a, m[0]);
  row(b, m[1]);
  row(c, m[2]);
  Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return sgn(det);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return orient(a, b, c) == 0;
}

Int det_int(std::vector<std::vector<Int>> m) {
  // Bareiss fraction-free elimination.
  int n = (int)m.size();
  Int denom = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (sgn(m[k][k]) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; i++)
        if (sgn(m[i][k]) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
      }
      m[i][k] = 0;
    }
    denom = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::pair<int, int> symmetric_inertia(std::vector<std::vector<Rat>> m) {
  // Eigenvalues of a symmetric matrix are all real, so Descartes' rule on the
  // characteristic polynomial is exact (with multiplicity). Supports n <= 3.
  int n = (int)m.size();
  std::vector<Rat> p;  // coefficients of det(lambda I - M), ascending
  if (n == 1) {
    p = {-m[0][0], Rat(1)};
  } else if (n == 2) {
    Rat tr = m[0][0] + m[1][1];
    Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    p = {det, -tr, Rat(1)};
  } else if (n == 3) {
    Rat tr = m[0][0] + m[1][1] + m[2][2];
    Rat c1 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
             m[1][1] * m[2][2] - m[1][2] * m[2][1];
    Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    p = {-det, c1, -tr, Rat(1)};
  } else {
    throw Error("Internal", "symmetric_inertia supports n <= 3");
  }
  auto variations = [](const std::vector<Rat>& v) {
    int var = 0, last = 0;
    for (auto& x : v) {
      int s = sgn(x);
      if (s == 0) continue;
      if (last != 0 && s != last) var++;
      last = s;
    }
    return var;
  };
  int pos = variations(p);
  std::vector<Rat> q = p;
  for (size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];  // p(-lambda), up to sign
  int neg = variations(q);
  return {pos, neg};
}

static void finish_conic(Conic& k) {
  canonicalize_triple(k.c.data(), 6);
  // symmetric matrix [[2A, B, D],[B, 2C, E],[D, E, 2F]] (2x the classical one;
  // determinant and inertia signs are unaffected)
  const Int &A = k.c[0], &B = k.c[1], &C = k.c[2], &D = k.c[3], &E = k.c[4], &F = k.c[5];
  std::vector<std::vector<Int>> m = {{2 * A, B, D}, {B, 2 * C, E}, {D, E, 2 * F}};
  k.det_sign = sgn(det_int(m));
  std::vector<std::vector<Rat>> mq(3, std::vector<Rat>(3));
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) mq[i][j] = Rat(m[i][j]);
  auto [p, n] = symmetric_inertia(mq);
  k.inertia_pos = p;
  k.inertia_neg = n;
}

Int Conic::eval(const ProjPoint& p) const {
  return c[0] * p.x * p.x + c[1] * p.x * p.y + c[2] * p.y * p.y + c[3] * p.x * p.z +
         c[4] * p.y * p.z + c[5] * p.z * p.z;
}

std::array<Int, 6> Conic::normalized() const {
  // want signature (2,1): negative side = disk component
  std::array<Int, 6> out = c;
  if (inertia_pos + inertia_neg == 3) {
    if (inertia_pos == 1) {  // (1,2) -> flip
      for (auto& v : out) v = -v;
    }
  }
  return out;
}

Conic conic_through(const std::array<ProjPoint, 5>& pts) {
  // rows of the 5x6 Veronese matrix
  std::vector<std::array<Int, 6>> v(5);
  for (int i = 0; i < 5; i++) {
    const ProjPoint& p = pts[i];
    v[i] = {p.x * p.x, p.x * p.y, p.y * p.y, p.x * p.z, p.y * p.z, p.z * p.z};
  }
  Conic k;
  for (int drop = 0; drop < 6; drop++) {
    std::vector<std::vector<Int>> m(5, std::vector<Int>(5));
    for (int i = 0; i < 5; i++) {
      int cj = 0;
      for (int j = 0; j < 6; j++) {
        if (j == drop) continue;
        m[i][cj++] = v[i][j];
      }
    }
    Int d = det_int(m);
    k.c[drop] = (drop % 2 == 0) ? d : Int(-d);
  }
  bool allzero = true;
  for (auto& x : k.c)
    if (sgn(x) != 0) allzero = false;
  if (allzero) throw Error("DegenerateConic", "five points do not determine a conic (coincidences)");
  finish_conic(k);
  for (int i = 0; i < 5; i++)
    if (sgn(k.eval(pts[i])) != 0) throw Error("Internal", "conic_through residual nonzero");
  if (k.det_sign == 0) {
    // find a collinear witness triple
    for (int i = 0; i < 5; i++)
      for (int j = i + 1; j < 5; j++)
        for (int l = j + 1; l < 5; l++)
          if (collinear(pts[i], pts[j], pts[l]))
            throw Error("DegenerateConic", "collinear triple at indices " + std::to_string(i) +
                                               "," + std::to_string(j) + "," + std::to_string(l));
    throw Error("DegenerateConic", "singular conic (no collinear witness found)");
  }
  return k;
}

Side point_conic_side(const Conic& k, const ProjPoint& p) {
  if (k.det_sign == 0) throw Error("DegenerateConic", "side test on singular conic");
  if (k.inertia_pos == 3 || k.inertia_neg == 3)
    throw Error("EmptyRealLocus", "definite conic has no real points");
  auto nc = k.normalized();
  Int v = nc[0] * p.x * p.x + nc[1] * p.x * p.y + nc[2] * p.y * p.y + nc[3] * p.x * p.z +
          nc[4] * p.y * p.z + nc[5] * p.z * p.z;
  int s = sgn(v);
  if (s < 0) return Side::Inside;
  if (s > 0) return Side::Outside;
  return Side::On;
}

int coconic_det_sign(const std::array<ProjPoint, 6>& pts) {
  std::vector<std::vector<Int>> m(6, std::vector<Int>(6));
  for (int i = 0; i < 6; i++) {
    const ProjPoint& p = pts[i];
    m[i] = {p.x * p.x, p.x * p.y, p.y * p.y, p.x * p.z, p.y * p.z, p.z * p.z};
  }
  return sgn(det_int(m));
}

bool coconic(const std::array<ProjPoint, 6>& pts) { return coconic_det_sign(pts) == 0; }

void CubicForm::canonicalize() { canonicalize_triple(c.data(), 10); }

bool CubicForm::is_zero() const {
  for (auto& v : c)
    if (sgn(v) != 0) return false;
  return true;
}

Int CubicForm::eval(const ProjPoint& p) const {
  Int acc = 0;
  for (int m = 0; m < 10; m++) {
    Int t = c[m];
    for (int e = 0; e < kMonomials[m][0]; e++) t *= p.x;
    for (int e = 0; e < kMonomials[m][1]; e++) t *= p.y;
    for (int e = 0; e < kMonomials[m][2]; e++) t *= p.z;
    acc += t;
  }
  return acc;
}

Rat CubicForm::eval(const Rat& x, const Rat& y, const Rat& z) const {
  Rat acc = 0;
  for (int m = 0; m < 10; m++) {
    Rat t = Rat(c[m]);
    for (int e = 0; e < kMonomials[m][0]; e++) t *= x;
    for (int e = 0; e < kMonomials[m][1]; e++) t *= y;
    for (int e = 0; e < kMonomials[m][2]; e++) t *= z;
    acc += t;
  }
  return acc;
}

std::array<Int, 6> CubicForm::partial_quadric(int var) const {
  // d/dvar of each monomial, collected in the quadric basis
  // (x^2, xy, y^2, xz, yz, z^2)
  std::array<Int, 6> q{};
  auto add = [&q](int ex, int ey, int ez, const Int& coef) {
    if (sgn(coef) == 0) return;
    if (ex == 2)
      q[0] += coef;
    else if (ex == 1 && ey == 1)
      q[1] += coef;
    else if (ey == 2)
      q[2] += coef;
    else if (ex == 1 && ez == 1)
      q[3] += coef;
    else if (ey == 1 && ez == 1)
      q[4] += coef;
    else
      q[5] += coef;
  };
  for (int m = 0; m < 10; m++) {
    int e[3] = {kMonomials[m][0], kMonomials[m][1], kMonomials[m][2]};
    if (e[var] == 0) continue;
    Int coef = c[m] * e[var];
    e[var]--;
    add(e[0], e[1], e[2], coef);
  }
  return q;
}

std::array<Int, 3> CubicForm::gradient(const ProjPoint& p) const {
  std::array<Int, 3> g;
  for (int var = 0; var < 3; var++) {
    auto q = partial_quadric(var);
    g[var] = q[0] * p.x * p.x + q[1] * p.x * p.y + q[2] * p.y * p.y + q[3] * p.x * p.z +
             q[4] * p.y * p.z + q[5] * p.z * p.z;
  }
  return g;
}

}  // namespace octet
