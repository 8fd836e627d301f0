#include "octet/curve_topology.hpp"

#include <algorithm>
#include <map>

#include "octet/algebraic.hpp"

namespace octet {

CubicForm substitute_linear(const CubicForm& f, const std::array<std::array<Rat, 3>, 3>& A) {
  // linear forms L_i = row i of A applied to (x, y, z)
  // expand f(L_0, L_1, L_2) by multiplying out the monomials
  // quadric basis: x2, xy, y2, xz, yz, z2 ; cubic basis as in CubicForm
  auto mul_lin = [](const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    std::array<Rat, 6> q{};
    q[0] = a[0] * b[0];
    q[1] = a[0] * b[1] + a[1] * b[0];
    q[2] = a[1] * b[1];
    q[3] = a[0] * b[2] + a[2] * b[0];
    q[4] = a[1] * b[2] + a[2] * b[1];
    q[5] = a[2] * b[2];
    return q;
  };
  auto mul_quad_lin = [](const std::array<Rat, 6>& q, const std::array<Rat, 3>& a) {
    std::array<Rat, 10> c{};
    // x^3, x^2 y, x^2 z, x y^2, x y z, x z^2, y^3, y^2 z, y z^2, z^3
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
  };
  std::array<Rat, 10> acc{};
  for (int m = 0; m < 10; m++) {
    if (sgn(f.c[m]) == 0) continue;
    int e[3] = {CubicForm::kMonomials[m][0], CubicForm::kMonomials[m][1],
                CubicForm::kMonomials[m][2]};
    std::vector<const std::array<Rat, 3>*> rows;
    for (int v = 0; v < 3; v++)
      for (int k = 0; k < e[v]; k++) rows.push_back(&A[v]);
    auto q = mul_lin(*rows[0], *rows[1]);
    auto c = mul_quad_lin(q, *rows[2]);
    for (int i = 0; i < 10; i++) acc[i] += Rat(f.c[m]) * c[i];
  }
  // clear denominators
  Int l = 1;
  for (auto& v : acc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  CubicForm out;
  for (int i = 0; i < 10; i++) {
    Rat v = acc[i] * Rat(l);
    v.canonicalize();
    out.c[i] = v.get_num();
  }
  out.canonicalize();
  return out;
}

namespace {

// dehomogenized cubic as a polynomial in y with Poly-in-x coefficients
PolyInY dehomogenize(const CubicForm& f) {
  PolyInY g(4);
  std::array<std::vector<Rat>, 4> cx;
  for (auto& v : cx) v.assign(4, Rat(0));
  for (int m = 0; m < 10; m++) {
    int ex = CubicForm::kMonomials[m][0], ey = CubicForm::kMonomials[m][1];
    cx[ey][ex] += Rat(f.c[m]);
  }
  for (int ey = 0; ey < 4; ey++) g[ey] = Poly::from(cx[ey]);
  trimy(g);
  return g;
}

struct Chart {
  CubicForm f;                   // transformed cubic
  std::vector<std::pair<Rat, Rat>> pts;  // transformed marked points (affine)
  PolyInY g;                     // dehomogenized
  Poly R;                        // squarefree y-discriminant-like resultant
  Poly alpha, beta;              // degree-1 remainder of (g, g_y): alpha*y + beta
  Rat c3;                        // constant y^3 coefficient
};

bool try_chart(const CubicForm& f0, const std::vector<ProjPoint>& marked,
               const std::array<std::array<Rat, 3>, 3>& A, Chart& out) {
  CubicForm f = substitute_linear(f0, A);
  // transformed marked points: X' = A^{-1} X ... we substitute coordinates, so
  // the curve f'(Y) = f(A Y) contains Y = A^{-1} X. Work with the inverse.
  // Instead apply the forward map to points: Y = M X with M = A^{-1}; to keep
  // things simple the caller passes A and we invert it here exactly.
  std::array<std::array<Rat, 3>, 3> M;
  {
    // inverse of A via adjugate
    Rat det = A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1]) -
              A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0]) +
              A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0]);
    if (sgn(det) == 0) return false;
    auto co = [&](int i, int j) {
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      return Rat(A[i1][j1] * A[i2][j2] - A[i1][j2] * A[i2][j1]);
    };
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++) M[i][j] = co(j, i) / det;
  }
  out.pts.clear();
  for (const ProjPoint& p : marked) {
    Rat X = Rat(p.x), Y = Rat(p.y), Z = Rat(p.z);
    Rat nx = M[0][0] * X + M[0][1] * Y + M[0][2] * Z;
    Rat ny = M[1][0] * X + M[1][1] * Y + M[1][2] * Z;
    Rat nz = M[2][0] * X + M[2][1] * Y + M[2][2] * Z;
    if (sgn(nz) == 0) return false;
    out.pts.push_back({nx / nz, ny / nz});
  }
  // leading form: one simple real root, not the vertical direction
  std::vector<Rat> phi(4, Rat(0));  // phi[k] = coeff of m^k in f(1, m, 0)
  for (int m = 0; m < 10; m++) {
    if (CubicForm::kMonomials[m][2] != 0) continue;
    phi[CubicForm::kMonomials[m][1]] += Rat(f.c[m]);
  }
  Poly phim = Poly::from(phi);
  if (phim.deg() != 3) return false;  // y^3 coefficient must survive
  Poly phisf = squarefree_part(phim);
  if (phisf.deg() != 3) return false;  // simple roots only
  SturmChain ch(phisf);
  if (ch.count_all_roots() != 1) return false;
  out.f = f;
  out.g = dehomogenize(f);
  if (degy(out.g) != 3 || out.g[3].deg() != 0) return false;
  out.c3 = out.g[3].c[0];
  PolyInY gy = poly_in_y_derivative(out.g);
  Poly R = resultant_y(out.g, gy);
  if (R.zero()) return false;
  Poly Rsf = squarefree_part(R);
  if (Rsf.deg() != R.deg()) return false;  // need simple folds
  out.R = primitive(Rsf, true);
  // degree-1 pseudo remainder: prem(g, g_y) then prem again if needed
  PolyInY r = pseudo_rem_y(out.g, gy);
  if (degy(r) == 2) r = pseudo_rem_y(gy, r);
  if (degy(r) != 1) return false;
  out.alpha = r[1];
  out.beta = r[0];
  // alpha must not vanish at any critical abscissa
  if (gcd(out.R, out.alpha).deg() >= 1) return false;
  // marked points: on the curve, away from critical columns
  for (auto& [x, y] : out.pts) {
    if (eval_poly_in_y(out.g, x, y) != 0) return false;
    if (out.R.sign_at(x) == 0) return false;
  }
  return true;
}

}  // namespace

CubicTopology smooth_cubic_topology(const CubicForm& f, const std::vector<ProjPoint>& marked) {
  // chart search: identity, then shears and infinity-line changes
  std::vector<std::array<std::array<Rat, 3>, 3>> charts;
  auto mk = [](long a00, long a01, long a02, long a10, long a11, long a12, long a20, long a21,
               long a22) {
    return std::array<std::array<Rat, 3>, 3>{
        {{Rat(a00), Rat(a01), Rat(a02)}, {Rat(a10), Rat(a11), Rat(a12)},
         {Rat(a20), Rat(a21), Rat(a22)}}};
  };
  charts.push_back(mk(1, 0, 0, 0, 1, 0, 0, 0, 1));
  for (long k : {1, -1, 2, -2, 3, -3}) charts.push_back(mk(1, k, 0, 0, 1, 0, 0, 0, 1));
  for (long k : {1, -1, 2, -2}) charts.push_back(mk(1, 0, 0, k, 1, 0, 0, 0, 1));
  for (long a : {1, -1, 2, -2})
    for (long b : {0, 1, -1}) charts.push_back(mk(1, 0, 0, 0, 1, 0, a, b, 3));
  for (long a : {1, -1})
    for (long k : {1, -1, 2}) charts.push_back(mk(1, k, 0, 0, 1, 0, a, 1, 4));
  for (long a : {3, -3, 5, -5})
    for (long k : {1, -1, 3}) charts.push_back(mk(2, k, 1, k, 2, 0, a, 1, 7));

  Chart ch;
  bool ok = false;
  for (auto& A : charts) {
    if (try_chart(f, marked, A, ch)) {
      ok = true;
      break;
    }
  }
  if (!ok) throw Error("TracingInconclusive", "no admissible chart for curve topology");

  // critical abscissae
  std::vector<RootInterval> crit = isolate_roots(ch.R);
  int k = (int)crit.size();
  // refine critical intervals away from the marked x's and each other
  for (auto& iv : crit) {
    for (auto& [x, y] : ch.pts)
      while (x > iv.lo && x < iv.hi) refine_interval(ch.R, iv);
  }
  for (int rounds = 0; rounds < 200; rounds++) {
    bool overlap = false;
    for (int i = 0; i + 1 < k; i++)
      if (!(crit[i].hi < crit[i + 1].lo)) {
        refine_interval(ch.R, crit[i]);
        refine_interval(ch.R, crit[i + 1]);
        overlap = true;
      }
    if (!overlap) break;
  }

  // stretch samples s_0 < xi_1 < s_1 < ... < xi_k < s_k
  std::vector<Rat> samples(k + 1);
  Rat bound = cauchy_root_bound(ch.R);
  for (auto& [x, y] : ch.pts) {
    Rat ax = abs(x) + 1;
    if (ax > bound) bound = ax;
  }
  samples[0] = k ? Rat(crit[0].lo - 1) : Rat(-bound);
  if (k) samples[0] = std::min(samples[0], Rat(-bound));
  for (int i = 1; i < k; i++) samples[i] = simplest_rational_between(crit[i - 1].hi, crit[i].lo);
  if (k) samples[k] = std::max(Rat(crit[k - 1].hi + 1), Rat(bound));
  if (!k) samples[0] = Rat(0);

  // fiber root counts per stretch
  std::vector<int> count(k + 1);
  std::vector<std::vector<RootInterval>> fibers(k + 1);
  for (int i = 0; i <= k; i++) {
    Poly gi = specialize_inner(ch.g, samples[i]);
    fibers[i] = isolate_roots(gi);
    count[i] = (int)fibers[i].size();
    if (count[i] % 2 == 0) throw Error("TracingInconclusive", "even fiber count");
  }
  if (count[0] != 1 || count[k] != 1)
    throw Error("TracingInconclusive", "outer fibers not single-valued");

  // fold analysis per critical column
  // survivor_above[i]: the surviving branch lies above the fold ordinate
  std::vector<bool> survivor_above(k);
  for (int i = 0; i < k; i++) {
    if (std::abs(count[i] - count[i + 1]) != 2)
      throw Error("TracingInconclusive", "fold does not change the fiber count by 2");
    AlgebraicReal xi(ch.R, crit[i]);
    // eta = -beta/alpha ; r_s = -c2/c3 - 2 eta ; sign(r_s - eta) =
    // sign(-c2 alpha + 3 beta c3) * sign(alpha) * sign(c3)
    Poly c2 = ch.g[2];
    Poly num = Rat(-1) * (c2 * ch.alpha) + Rat(3) * ch.c3 * ch.beta;
    int s = xi.sign_of(num) * xi.sign_of(ch.alpha) * sgn(ch.c3);
    if (s == 0) throw Error("TracingInconclusive", "fold ordinate coincides with survivor");
    survivor_above[i] = s > 0;
  }

  // arc graph: node = (stretch, slot); each node has a left port and right
  // port; ports link to (node, side) pairs
  struct Port {
    int node = -1;
  };
  int total = 0;
  std::vector<int> base(k + 2, 0);
  for (int i = 0; i <= k; i++) {
    base[i] = total;
    total += count[i];
  }
  auto node_id = [&](int stretch, int slot) { return base[stretch] + slot; };
  // adjacency: two links per node
  std::vector<std::vector<int>> adj(total);
  auto link = [&](int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (int i = 0; i < k; i++) {
    int nl = count[i], nr = count[i + 1];
    if (nl > nr) {
      // two left slots merge at the fold, the rest pass through
      int merge_lo = survivor_above[i] ? 0 : nl - 2;
      link(node_id(i, merge_lo), node_id(i, merge_lo + 1));
      for (int s = 0; s < nl; s++) {
        if (s == merge_lo || s == merge_lo + 1) continue;
        int shift = s > merge_lo ? s - 2 : s;
        link(node_id(i, s), node_id(i + 1, shift));
      }
    } else {
      int merge_lo = survivor_above[i] ? 0 : nr - 2;
      link(node_id(i + 1, merge_lo), node_id(i + 1, merge_lo + 1));
      for (int s = 0; s < nr; s++) {
        if (s == merge_lo || s == merge_lo + 1) continue;
        int shift = s > merge_lo ? s - 2 : s;
        link(node_id(i + 1, s), node_id(i, shift));
      }
    }
  }
  // the two unbounded ends meet at the single point at infinity
  link(node_id(0, 0), node_id(k, count[k] - 1 - (count[k] - 1)));  // (k, 0)

  for (int u = 0; u < total; u++)
    if (adj[u].size() != 2) throw Error("TracingInconclusive", "arc graph degree mismatch");

  // locate marked points: stretch + slot + x for ordering
  struct Mark {
    int idx;
    Rat x;
  };
  std::vector<std::vector<Mark>> on_node(total);
  for (int m = 0; m < (int)ch.pts.size(); m++) {
    const Rat& x = ch.pts[m].first;
    const Rat& y = ch.pts[m].second;
    int stretch = 0;
    for (int i = 0; i < k; i++)
      if (x >= crit[i].hi) stretch = i + 1;  // equality: x right of the root
    Poly gx = specialize_inner(ch.g, x);
    auto roots = isolate_roots(gx);
    if ((int)roots.size() != count[stretch])
      throw Error("TracingInconclusive",
                  "fiber count mismatch at marked point: stretch " + std::to_string(stretch) +
                      " of " + std::to_string(k + 1) + " expects " +
                      std::to_string(count[stretch]) + ", got " +
                      std::to_string(roots.size()) + " at x=" + rat_to_string(x));
    int slot = -1;
    for (int r = 0; r < (int)roots.size(); r++) {
      // y is an exact root; find its interval
      if (y > roots[r].lo && y < roots[r].hi) slot = r;
      if (gx.sign_at(y) != 0) throw Error("Internal", "marked point off the curve");
    }
    if (slot < 0) throw Error("TracingInconclusive", "marked root not isolated");
    on_node[node_id(stretch, slot)].push_back({m, x});
  }
  for (auto& v : on_node)
    std::sort(v.begin(), v.end(), [](const Mark& a, const Mark& b) { return a.x < b.x; });

  // traverse components
  std::vector<int> comp(total, -1);
  CubicTopology out;
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < total; start++) {
    if (comp[start] >= 0) continue;
    int cid = (int)cycles.size();
    std::vector<int> order;  // marked indices in traversal order
    int prev = -1, cur = start;
    // direction flag: moving rightwards initially
    bool rightward = true;
    do {
      comp[cur] = cid;
      const auto& marks = on_node[cur];
      if (rightward)
        for (auto& mk2 : marks) order.push_back(mk2.idx);
      else
        for (auto it = marks.rbegin(); it != marks.rend(); ++it) order.push_back(it->idx);
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      // direction of the next arc: compare stretch indices
      int cs = 0, ns = 0;
      {
        int u = cur, v = nxt;
        int su = (int)(std::upper_bound(base.begin(), base.begin() + k + 1, u) - base.begin()) - 1;
        int sv = (int)(std::upper_bound(base.begin(), base.begin() + k + 1, v) - base.begin()) - 1;
        cs = su;
        ns = sv;
      }
      if (ns > cs)
        rightward = true;
      else if (ns < cs)
        rightward = false;
      else
        rightward = !rightward;  // fold or infinity bounce reverses direction
      prev = cur;
      cur = nxt;
    } while (cur != start);
    cycles.push_back(order);
  }
  if (cycles.size() > 2) throw Error("TracingInconclusive", "more than two components");
  // the pseudoline is the component containing the unbounded arcs
  int pseudo = comp[node_id(0, 0)];
  for (int cid = 0; cid < (int)cycles.size(); cid++) {
    if (cid == pseudo)
      out.pseudoline_points = cycles[cid];
    else {
      out.has_oval = true;
      out.oval_points = cycles[cid];
    }
  }
  return out;
}

}  // namespace octet
