#include "octet/pencil.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "octet/curve_topology.hpp"

#include <cstdio>
#include <cstdlib>

namespace octet {

namespace {

std::array<Int, 10> cubic_row(const ProjPoint& p) {
  std::array<Int, 10> r;
  for (int m = 0; m < 10; m++) {
    Int t = 1;
    for (int e = 0; e < CubicForm::kMonomials[m][0]; e++) t *= p.x;
    for (int e = 0; e < CubicForm::kMonomials[m][1]; e++) t *= p.y;
    for (int e = 0; e < CubicForm::kMonomials[m][2]; e++) t *= p.z;
    r[m] = t;
  }
  return r;
}

// 2-dimensional rational kernel of an 8x10 integer matrix; throws
// RankDeficient if the rank is below 8.
std::pair<CubicForm, CubicForm> kernel_basis(std::vector<std::array<Int, 10>> m) {
  int rows = (int)m.size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(10));
  for (int i = 0; i < rows; i++)
    for (int j = 0; j < 10; j++) a[i][j] = Rat(m[i][j]);
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < 10 && r < rows; c++) {
    int piv = -1;
    for (int i = r; i < rows; i++)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    Rat d = a[r][c];
    for (int j = 0; j < 10; j++) a[r][j] /= d;
    for (int i = 0; i < rows; i++) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 10; j++) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    r++;
  }
  if (r != 8) throw Error("RankDeficient", "rank " + std::to_string(r) + " < 8");
  std::vector<int> free_cols;
  for (int c = 0; c < 10; c++)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
      free_cols.push_back(c);
  auto build = [&](int fc) {
    std::array<Rat, 10> v{};
    v[fc] = 1;
    for (int i = 0; i < 8; i++) v[pivot_col[i]] = -a[i][fc];
    Int l = 1;
    for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    CubicForm f;
    for (int j = 0; j < 10; j++) {
      Rat x = v[j] * Rat(l);
      x.canonicalize();
      f.c[j] = x.get_num();
    }
    f.canonicalize();
    return f;
  };
  return {build(free_cols[0]), build(free_cols[1])};
}

// linear form product helpers for the Hessian cubic
using Lin = std::array<Int, 3>;   // a x + b y + c z
using Quad = std::array<Int, 6>;  // conic coefficient order
using Cub = std::array<Int, 10>;

Quad mul_lin(const Lin& a, const Lin& b) {
  Quad q{};
  q[0] = a[0] * b[0];
  q[1] = a[0] * b[1] + a[1] * b[0];
  q[2] = a[1] * b[1];
  q[3] = a[0] * b[2] + a[2] * b[0];
  q[4] = a[1] * b[2] + a[2] * b[1];
  q[5] = a[2] * b[2];
  return q;
}

Cub mul_quad_lin(const Quad& q, const Lin& a) {
  Cub c{};
  c[0] = q[0] * a[0];
  c[1] = q[0] * a[1] + q[1] * a[0];
  c[2] = q[0] * a[2] + q[3] * a[0];
  c[3] = q[1] * a[1] + q[2] * a[0];
  c[4] = q[1] * a[2] + q[3] * a[1] + q[4] * a[0];
  c[5] = q[3] * a[2] + q[5] * a[0];
  c[6] = q[2] * a[1];
  c[7] = q[2] * a[2] + q[4] * a[1];
  c[8] = q[4] * a[2] + q[5] * a[1];
  c[9] = q[5] * a[2];
  return c;
}

// second partials of a cubic as linear forms: H[i][j]
std::array<std::array<Lin, 3>, 3> hessian_entries(const CubicForm& f) {
  std::array<std::array<Lin, 3>, 3> h{};
  for (int m = 0; m < 10; m++) {
    if (sgn(f.c[m]) == 0) continue;
    int e[3] = {CubicForm::kMonomials[m][0], CubicForm::kMonomials[m][1],
                CubicForm::kMonomials[m][2]};
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) {
        int ei[3] = {e[0], e[1], e[2]};
        if (ei[i] == 0) continue;
        Int coef = f.c[m] * ei[i];
        ei[i]--;
        if (ei[j] == 0) continue;
        coef *= ei[j];
        ei[j]--;
        // remaining exponent vector has total degree 1
        for (int v = 0; v < 3; v++)
          if (ei[v] == 1) h[i][j][v] += coef;
      }
  }
  return h;
}

Cub hessian_cubic(const CubicForm& f) {
  auto h = hessian_entries(f);
  Cub acc{};
  int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {2, 1, 0}};
  int sign[6] = {1, 1, 1, -1, -1, -1};
  for (int p = 0; p < 6; p++) {
    Quad q = mul_lin(h[0][perm[p][0]], h[1][perm[p][1]]);
    Cub c = mul_quad_lin(q, h[2][perm[p][2]]);
    for (int i = 0; i < 10; i++) acc[i] += sign[p] * c[i];
  }
  return acc;
}

std::array<Int, 6> cubic_partial(const Cub& c, int var) {
  CubicForm f;
  f.c = c;
  return f.partial_quadric(var);
}

}  // namespace

Int cubic_disc_value(const CubicForm& f) {
  // 6x6 determinant: rows = the three partials of f and the three partials
  // of the Hessian cubic, in the quadric monomial basis
  std::vector<std::vector<Int>> m(6, std::vector<Int>(6));
  for (int v = 0; v < 3; v++) {
    auto q = f.partial_quadric(v);
    for (int j = 0; j < 6; j++) m[v][j] = q[j];
  }
  Cub h = hessian_cubic(f);
  for (int v = 0; v < 3; v++) {
    auto q = cubic_partial(h, v);
    for (int j = 0; j < 6; j++) m[3 + v][j] = q[j];
  }
  return det_int(std::move(m));
}

CubicForm member_at(const Pencil& p, const Rat& t) {
  CubicForm f;
  Int num = t.get_num(), den = t.get_den();
  for (int i = 0; i < 10; i++) f.c[i] = den * p.f0.c[i] + num * p.f1.c[i];
  f.canonicalize();
  if (f.is_zero()) throw Error("Internal", "zero member");
  return f;
}

namespace {

Poly pencil_disc(const CubicForm& f0, const CubicForm& f1) {
  std::vector<Rat> xs, ys;
  for (int k = -6; k <= 6; k++) {
    Rat t(k);
    CubicForm f;
    for (int i = 0; i < 10; i++) f.c[i] = f0.c[i] + k * f1.c[i];
    xs.push_back(t);
    ys.push_back(Rat(cubic_disc_value(f)));
  }
  Poly d = interpolate(xs, ys);
  if (d.deg() > 12) throw Error("Internal", "discriminant degree exceeds 12");
  return d.zero() ? d : primitive(d, true);
}

ProjPoint compute_ninth(const std::array<ProjPoint, 8>& pts, const CubicForm& f0,
                        const CubicForm& f1) {
  // elimination chart: coordinates may be sheared so that the nine
  // projections are distinct
  std::vector<std::array<std::array<Rat, 3>, 3>> tries;
  auto mk = [](long k) {
    return std::array<std::array<Rat, 3>, 3>{
        {{Rat(1), Rat(k), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}}};
  };
  tries.push_back(mk(0));
  for (long k : {1, -1, 2, -2, 3, 5, 7, -7}) tries.push_back(mk(k));
  const bool dbg = std::getenv("OCTET_DEBUG_NINTH") != nullptr;
  for (auto& A : tries) {
    CubicForm g0 = substitute_linear(f0, A), g1 = substitute_linear(f1, A);
    // inverse transform for points: x' = x - k y etc: A maps new->old, so
    // new coordinates of an old point X are A^{-1} X; A is unit upper
    // triangular with entry k: inverse has -k.
    Rat k = A[0][1];
    std::vector<std::pair<Rat, Rat>> ap;
    bool affine_ok = true;
    for (auto& p : pts) {
      if (sgn(p.z) == 0) {
        affine_ok = false;
        break;
      }
      ap.push_back({p.ax() - k * p.ay(), p.ay()});
    }
    if (!affine_ok) continue;
    // distinct x's
    bool distinct = true;
    for (int i = 0; i < 8 && distinct; i++)
      for (int j = i + 1; j < 8; j++)
        if (ap[i].first == ap[j].first) {
          distinct = false;
          break;
        }
    if (!distinct) {
      if (dbg) std::fprintf(stderr, "[ninth] k=%s: duplicate x\n", rat_to_string(A[0][1]).c_str());
      continue;
    }
    // resultant in y
    auto tohy = [](const CubicForm& f) {
      PolyInY g(4);
      std::array<std::vector<Rat>, 4> cx;
      for (auto& v : cx) v.assign(4, Rat(0));
      for (int m = 0; m < 10; m++)
        cx[CubicForm::kMonomials[m][1]][CubicForm::kMonomials[m][0]] += Rat(f.c[m]);
      for (int ey = 0; ey < 4; ey++) g[ey] = Poly::from(cx[ey]);
      trimy(g);
      return g;
    };
    Poly R = resultant_y(tohy(g0), tohy(g1));
    if (dbg) std::fprintf(stderr, "[ninth] k=%s: degR=%d\n", rat_to_string(A[0][1]).c_str(), R.deg());
    if (R.zero()) continue;
    // divide the eight known roots out
    Poly q = R;
    bool ok = true;
    for (auto& [x, y] : ap) {
      Poly lin = Poly::from({-x, Rat(1)});
      auto [qq, rr] = divmod(q, lin);
      if (!rr.zero()) {
        ok = false;
        break;
      }
      q = qq;
    }
    if (!ok || q.deg() != 1) {
      if (dbg) std::fprintf(stderr, "[ninth]   division ok=%d residual_deg=%d\n", (int)ok, q.deg());
      continue;
    }
    Rat x9 = -q.c[0] / q.c[1];
    // y-coordinate: common root of the two specialized cubics
    auto specialize = [&](const CubicForm& f) {
      std::vector<Rat> cy(4, Rat(0));
      for (int m = 0; m < 10; m++) {
        Rat t = Rat(f.c[m]);
        for (int e = 0; e < CubicForm::kMonomials[m][0]; e++) t *= x9;
        cy[CubicForm::kMonomials[m][1]] += t;
      }
      return Poly::from(cy);
    };
    Poly a = specialize(g0), b = specialize(g1);
    Poly g = gcd(a, b);
    if (dbg) std::fprintf(stderr, "[ninth]   gcd deg=%d\n", g.deg());
    if (g.deg() != 1) continue;
    Rat y9 = -g.c[0] / g.c[1];
    // transform back: old x = new x + k * new y
    ProjPoint ninth(x9 + k * y9, y9);
    return ninth;
  }
  throw Error("EliminationCollision", "no elimination chart separated the base points");
}

}  // namespace

Pencil pencil_through(const std::array<ProjPoint, 8>& pts) {
  std::vector<std::array<Int, 10>> rows;
  for (auto& p : pts) rows.push_back(cubic_row(p));
  auto [f0, f1] = kernel_basis(rows);
  Pencil p;
  p.base = pts;
  p.f0 = f0;
  p.f1 = f1;
  // adjust the basis so the discriminant has exact degree 12 (the member at
  // infinity is then nonsingular and the parameter circle closes through a
  // smooth gap); every candidate is an invertible mix of the kernel basis
  std::vector<std::array<int, 4>> mixes = {
      {1, 0, 0, 1}, {1, 0, 1, 1},  {1, 0, -1, 1}, {1, 0, 1, 2},  {1, 0, -1, 2},
      {1, 0, 2, 1}, {1, 0, -2, 1}, {1, 1, 0, 1},  {1, -1, 0, 1}, {2, 1, 1, 1},
      {1, 2, 1, 1}, {3, 1, 2, 1},  {1, 3, 1, 2},  {1, -2, 2, 1}, {5, 2, 2, 1}};
  bool ok = false;
  for (auto& mx : mixes) {
    if (mx[0] * mx[3] - mx[1] * mx[2] == 0) continue;
    CubicForm g0, g1;
    for (int i = 0; i < 10; i++) {
      g0.c[i] = mx[0] * f0.c[i] + mx[1] * f1.c[i];
      g1.c[i] = mx[2] * f0.c[i] + mx[3] * f1.c[i];
    }
    g0.canonicalize();
    g1.canonicalize();
    if (g0.is_zero() || g1.is_zero()) continue;
    Poly d = pencil_disc(g0, g1);
    if (d.deg() == 12) {
      p.f0 = g0;
      p.f1 = g1;
      p.disc = d;
      ok = true;
      break;
    }
  }
  if (!ok) {
    Poly d = pencil_disc(p.f0, p.f1);
    if (d.zero()) throw Error("IdenticallyZero", "every member is singular");
    p.disc = d;  // degenerate pencils (walls) keep a lower-degree discriminant
  }
  p.disc_sf = primitive(squarefree_part(p.disc), true);
  p.ninth = compute_ninth(pts, p.f0, p.f1);
  {
    ProjPoint n = p.ninth;
    if (sgn(p.f0.eval(n)) != 0 || sgn(p.f1.eval(n)) != 0)
      throw Error("Internal", "ninth base point does not lie on the pencil");
  }
  return p;
}

// ----- reducible members -----

std::vector<ReducibleMember> reducible_census(const Pencil& p) {
  std::vector<ProjPoint> base9(p.base.begin(), p.base.end());
  base9.push_back(p.ninth);
  std::vector<ReducibleMember> out;
  std::set<std::array<uint64_t, 2>> seen_t;  // dedupe by parameter
  for (int i = 0; i < 9; i++)
    for (int j = i + 1; j < 9; j++)
      for (int k = j + 1; k < 9; k++) {
        if (!collinear(base9[i], base9[j], base9[k])) continue;
        // member = line(i,j) * conic through the remaining six
        Lin l{};
        {
          const ProjPoint &a = base9[i], &b = base9[j];
          l[0] = a.y * b.z - a.z * b.y;
          l[1] = a.z * b.x - a.x * b.z;
          l[2] = a.x * b.y - a.y * b.x;
        }
        std::vector<ProjPoint> rest;
        for (int r = 0; r < 9; r++)
          if (r != i && r != j && r != k) rest.push_back(base9[r]);
        // conic through the six remaining points: kernel of the 6x6 Veronese
        std::vector<std::vector<Rat>> vm(6, std::vector<Rat>(6));
        for (int r = 0; r < 6; r++) {
          const ProjPoint& q = rest[r];
          vm[r] = {Rat(q.x * q.x), Rat(q.x * q.y), Rat(q.y * q.y),
                   Rat(q.x * q.z), Rat(q.y * q.z), Rat(q.z * q.z)};
        }
        // nullspace via elimination
        std::vector<int> piv;
        int rr = 0;
        for (int c = 0; c < 6 && rr < 6; c++) {
          int pv = -1;
          for (int r2 = rr; r2 < 6; r2++)
            if (sgn(vm[r2][c]) != 0) {
              pv = r2;
              break;
            }
          if (pv < 0) continue;
          std::swap(vm[rr], vm[pv]);
          Rat d = vm[rr][c];
          for (int c2 = 0; c2 < 6; c2++) vm[rr][c2] /= d;
          for (int r2 = 0; r2 < 6; r2++) {
            if (r2 == rr || sgn(vm[r2][c]) == 0) continue;
            Rat f = vm[r2][c];
            for (int c2 = 0; c2 < 6; c2++) vm[r2][c2] -= f * vm[rr][c2];
          }
          piv.push_back(c);
          rr++;
        }
        if (rr != 5) continue;  // six points in deeper degeneration
        std::array<Rat, 6> qv{};
        int fc = -1;
        for (int c = 0; c < 6; c++)
          if (std::find(piv.begin(), piv.end(), c) == piv.end()) fc = c;
        qv[fc] = 1;
        for (int r2 = 0; r2 < 5; r2++) qv[piv[r2]] = -vm[r2][fc];
        // member cubic = line * conic
        Int lden = 1;
        for (auto& x : qv) mpz_lcm(lden.get_mpz_t(), lden.get_mpz_t(), x.get_den().get_mpz_t());
        Quad qi{};
        for (int c = 0; c < 6; c++) {
          Rat x = qv[c] * Rat(lden);
          x.canonicalize();
          qi[c] = x.get_num();
        }
        // multiply line and conic into a cubic (reuse form expansion)
        Cub prod{};
        {
          // q(x,y,z) * l(x,y,z)
          CubicForm tmp;
          // quadric monomials: x2, xy, y2, xz, yz, z2
          prod = mul_quad_lin(qi, l);
        }
        CubicForm member;
        member.c = prod;
        member.canonicalize();
        // locate the parameter: solve s f0 + t f1 = member up to scale
        // using two independent coefficient positions
        Rat tparam;
        {
          // find columns where (f0, f1) is invertible
          bool solved = false;
          for (int aC = 0; aC < 10 && !solved; aC++)
            for (int bC = aC + 1; bC < 10 && !solved; bC++) {
              Int det = p.f0.c[aC] * p.f1.c[bC] - p.f0.c[bC] * p.f1.c[aC];
              if (sgn(det) == 0) continue;
              // s * f0 + t * f1 = member (projectively): solve 2x2
              Rat s = Rat(member.c[aC] * p.f1.c[bC] - member.c[bC] * p.f1.c[aC]) / Rat(det);
              Rat tt = Rat(p.f0.c[aC] * member.c[bC] - p.f0.c[bC] * member.c[aC]) / Rat(det);
              // verify full proportionality
              bool match = true;
              for (int cC = 0; cC < 10; cC++)
                if (s * Rat(p.f0.c[cC]) + tt * Rat(p.f1.c[cC]) != Rat(member.c[cC])) {
                  match = false;
                  break;
                }
              if (!match) continue;
              if (sgn(s) == 0) {
                // member at infinity: basis was adjusted to avoid this for
                // generic pencils; report with a sentinel
                throw Error("Internal", "reducible member at the infinite parameter");
              }
              tparam = tt / s;
              solved = true;
            }
          if (!solved) continue;  // not a member of the pencil
        }
        ReducibleMember rm;
        rm.line = {i + 1, j + 1, k + 1};
        for (int r = 0; r < 9; r++)
          if (r != i && r != j && r != k) rm.conic_points.push_back(r + 1);
        rm.t = tparam;
        // completely reducible iff the conic factor splits into real lines
        Conic cq;
        cq.c = qi;
        std::vector<std::vector<Rat>> mm = {
            {Rat(2 * qi[0]), Rat(qi[1]), Rat(qi[3])},
            {Rat(qi[1]), Rat(2 * qi[2]), Rat(qi[4])},
            {Rat(qi[3]), Rat(qi[4]), Rat(2 * qi[5])}};
        auto [pos, neg] = symmetric_inertia(mm);
        rm.completely_reducible = (pos + neg <= 2) && pos <= 1 && neg <= 1;
        auto key = std::array<uint64_t, 2>{(uint64_t)tparam.get_num().get_ui(),
                                           (uint64_t)tparam.get_den().get_ui()};
        (void)key;
        // dedupe by parameter value (completely reducible members appear for
        // each of their three lines)
        bool dup = false;
        for (auto& prev : out) dup |= prev.t == rm.t;
        if (!dup) out.push_back(rm);
      }
  return out;
}

std::array<ProjPoint, 9> pappus_configuration() {
  auto P = [](long x, long y, long d) { return ProjPoint(Rat(x, d), Rat(y, d)); };
  return {P(0, 0, 1), P(1, 0, 1), P(3, 0, 1),          // A B C on y=0
          P(0, 1, 1), P(1, 1, 1), P(2, 1, 1),          // D E F on y=1
          ProjPoint(Rat(1, 2), Rat(1, 2)),             // G = AE x BD
          ProjPoint(Rat(6, 5), Rat(3, 5)),             // H = AF x CD
          ProjPoint(Rat(5, 3), Rat(2, 3))};            // I = BF x CE
}

}  // namespace octet
