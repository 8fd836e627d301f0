#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "octet/curve_topology.hpp"
#include "octet/paper_data.hpp"
#include "octet/pencil.hpp"

namespace octet {

namespace {

// ----- rational interval arithmetic -----

struct IV {
  Rat lo, hi;
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

IV iv_point(const Rat& v) { return {v, v}; }

IV operator+(const IV& a, const IV& b) { return {a.lo + b.lo, a.hi + b.hi}; }
IV operator-(const IV& a, const IV& b) { return {a.lo - b.hi, a.hi - b.lo}; }
IV operator-(const IV& a) { return {-a.hi, -a.lo}; }
IV operator*(const IV& a, const IV& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}
bool iv_divide(const IV& num, const IV& den, IV& out) {
  if (den.contains_zero()) return false;
  Rat c1 = num.lo / den.lo, c2 = num.lo / den.hi, c3 = num.hi / den.lo, c4 = num.hi / den.hi;
  out = {std::min(std::min(c1, c2), std::min(c3, c4)),
         std::max(std::max(c1, c2), std::max(c3, c4))};
  return true;
}
IV intersect(const IV& a, const IV& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}
bool inside(const IV& a, const IV& b) { return a.lo > b.lo && a.hi < b.hi; }

// affine cubic g(x, y) = F(x, y, 1) with F = f0 + t f1; coefficient of each
// monomial is linear in t
struct AffineCubic {
  // index by (ex, ey), ex+ey <= 3: value c0 + t c1
  std::map<std::pair<int, int>, std::pair<Rat, Rat>> c;

  static AffineCubic from(const Pencil& p) {
    AffineCubic g;
    for (int m = 0; m < 10; m++) {
      int ex = CubicForm::kMonomials[m][0], ey = CubicForm::kMonomials[m][1];
      auto& slot = g.c[{ex, ey}];
      slot.first += Rat(p.f0.c[m]);
      slot.second += Rat(p.f1.c[m]);
    }
    return g;
  }
  AffineCubic dx() const {
    AffineCubic d;
    for (auto& [k, v] : c) {
      if (k.first == 0) continue;
      auto& slot = d.c[{k.first - 1, k.second}];
      slot.first += k.first * v.first;
      slot.second += k.first * v.second;
    }
    return d;
  }
  AffineCubic dy() const {
    AffineCubic d;
    for (auto& [k, v] : c) {
      if (k.second == 0) continue;
      auto& slot = d.c[{k.first, k.second - 1}];
      slot.first += k.second * v.first;
      slot.second += k.second * v.second;
    }
    return d;
  }
  IV eval(const IV& x, const IV& y, const IV& t) const {
    IV acc = iv_point(Rat(0));
    for (auto& [k, v] : c) {
      IV coef = iv_point(v.first) + iv_point(v.second) * t;
      IV term = coef;
      for (int e = 0; e < k.first; e++) term = term * x;
      for (int e = 0; e < k.second; e++) term = term * y;
      acc = acc + term;
    }
    return acc;
  }
  double eval_d(double x, double y, double t) const {
    double acc = 0;
    for (auto& [k, v] : c) {
      double coef = v.first.get_d() + v.second.get_d() * t;
      acc += coef * std::pow(x, k.first) * std::pow(y, k.second);
    }
    return acc;
  }
};

// Certified node kind at a simple singular parameter: +1 isolated, -1
// crossing. Uses float search for the critical points of the member and
// exact interval Newton for certification.
int certified_node_kind(const Pencil& p, const AlgebraicReal& troot) {
  AffineCubic g = AffineCubic::from(p);
  AffineCubic gx = g.dx(), gy = g.dy();
  AffineCubic gxx = gx.dx(), gxy = gx.dy(), gyy = gy.dy();

  for (int attempt = 0; attempt < 6; attempt++) {
    troot.refine_below(Rat(1, Int(1) << (40 + 20 * attempt)));
    IV T{troot.iv.lo, troot.iv.hi};
    double td = T.mid().get_d();
    // float critical points of the member
    std::vector<std::pair<double, double>> found;
    double span = 0;
    for (auto& bp : p.base) {
      span = std::max(span, std::abs(bp.ax().get_d()));
      span = std::max(span, std::abs(bp.ay().get_d()));
    }
    span = 2 * span + 2;
    for (int ix = 0; ix < 14; ix++)
      for (int iy = 0; iy < 14; iy++) {
        double x = -span + 2 * span * (ix + 0.5) / 14;
        double y = -span + 2 * span * (iy + 0.5) / 14;
        bool conv = false;
        for (int it = 0; it < 60; it++) {
          double fx = gx.eval_d(x, y, td), fy = gy.eval_d(x, y, td);
          double a = gxx.eval_d(x, y, td), b = gxy.eval_d(x, y, td),
                 d = gyy.eval_d(x, y, td);
          double det = a * d - b * b;
          if (std::abs(det) < 1e-14) break;
          double sx = (d * fx - b * fy) / det, sy = (a * fy - b * fx) / det;
          x -= sx;
          y -= sy;
          if (std::abs(sx) + std::abs(sy) < 1e-13) {
            conv = true;
            break;
          }
        }
        if (!conv || !std::isfinite(x) || !std::isfinite(y)) continue;
        if (std::abs(x) > 4 * span || std::abs(y) > 4 * span) continue;
        bool dup = false;
        for (auto& f : found)
          dup |= std::abs(f.first - x) < 1e-7 && std::abs(f.second - y) < 1e-7;
        if (!dup) found.push_back({x, y});
      }
    // certify each candidate; keep the ones that could be the node
    struct Cand {
      bool is_zero_certified = false;
      bool g_excluded = false;  // curve value bounded away from zero
      int hess_sign = 0;
    };
    std::vector<Cand> cands;
    for (auto& [xf, yf] : found) {
      Cand cd;
      for (int shrink = 0; shrink < 8; shrink++) {
        Rat rx((long)std::llround(xf * (1 << 20)), 1 << 20);
        Rat ry((long)std::llround(yf * (1 << 20)), 1 << 20);
        Rat rad = Rat(1, Int(1) << (6 + 2 * shrink));
        IV X{rx - rad, rx + rad}, Y{ry - rad, ry + rad};
        // interval Newton step at the midpoint
        IV Fx = gx.eval(iv_point(rx), iv_point(ry), T);
        IV Fy = gy.eval(iv_point(rx), iv_point(ry), T);
        IV A = gxx.eval(X, Y, T), B = gxy.eval(X, Y, T), D = gyy.eval(X, Y, T);
        IV det = A * D - B * B;
        IV ndx, ndy;
        IV numx = D * Fx - B * Fy, numy = A * Fy - B * Fx;
        if (!iv_divide(numx, det, ndx) || !iv_divide(numy, det, ndy)) continue;
        IV NX = iv_point(rx) - ndx, NY = iv_point(ry) - ndy;
        if (!inside(NX, X) || !inside(NY, Y)) continue;
        cd.is_zero_certified = true;
        // refine the enclosure before judging
        IV EX = intersect(NX, X), EY = intersect(NY, Y);
        IV gval = g.eval(EX, EY, T);
        if (!gval.contains_zero()) cd.g_excluded = true;
        IV H = gxx.eval(EX, EY, T) * gyy.eval(EX, EY, T) -
               gxy.eval(EX, EY, T) * gxy.eval(EX, EY, T);
        if (!H.contains_zero()) cd.hess_sign = sgn(H.lo) > 0 ? 1 : -1;
        break;
      }
      if (cd.is_zero_certified) cands.push_back(cd);
    }
    std::vector<const Cand*> possible;
    for (auto& cd : cands)
      if (!cd.g_excluded) possible.push_back(&cd);
    if (possible.size() == 1 && possible[0]->hess_sign != 0) return possible[0]->hess_sign;
  }
  throw Error("TracingInconclusive", "node kind could not be certified");
}

std::vector<int> canonical_circuit(const std::vector<int>& w) {
  size_t n = w.size();
  std::vector<int> best;
  for (int rev = 0; rev < 2; rev++) {
    std::vector<int> v = w;
    if (rev) std::reverse(v.begin(), v.end());
    for (size_t r = 0; r < n; r++) {
      std::vector<int> cand(n);
      for (size_t i = 0; i < n; i++) cand[i] = v[(r + i) % n];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

}  // namespace

PencilAnalysis analyze_pencil(const std::array<ProjPoint, 8>& pts) {
  PencilAnalysis out;
  out.pencil = pencil_through(pts);
  Pencil& P = out.pencil;

  auto reds = reducible_census(P);
  if (!reds.empty() || P.disc.deg() != P.disc_sf.deg() || P.disc.deg() != 12)
    out.generic = false;

  std::vector<RootInterval> roots = isolate_roots(P.disc_sf);
  int n = (int)roots.size();
  out.n_real = n;
  if (!out.generic) {
    for (auto& rm : reds) {
      SingularMember m;
      m.t = AlgebraicReal(Poly::from({-rm.t, Rat(1)}), RootInterval{rm.t - 1, rm.t + 1});
      m.t_rational = true;
      m.t_value = rm.t;
      m.kind = MemberKind::Reducible;
      m.line_triple = rm.line;
      m.completely_reducible = rm.completely_reducible;
      out.members.push_back(std::move(m));
    }
    return out;
  }
  if (n == 0) throw Error("Internal", "no real singular member");

  // separate the root intervals
  for (int rounds = 0; rounds < 300; rounds++) {
    bool overlap = false;
    for (int i = 0; i + 1 < n; i++)
      if (!(roots[i].hi < roots[i + 1].lo)) {
        refine_interval(P.disc_sf, roots[i]);
        refine_interval(P.disc_sf, roots[i + 1]);
        overlap = true;
      }
    if (!overlap) break;
  }

  // gap samples (gap i lies after root i; the last gap wraps through infinity)
  Rat bound = cauchy_root_bound(P.disc_sf) + 1;
  std::vector<Rat> sample(n);
  for (int i = 0; i + 1 < n; i++)
    sample[i] = simplest_rational_between(roots[i].hi, roots[i + 1].lo);
  sample[n - 1] = bound;

  struct GapData {
    bool has_oval;
    std::vector<int> oval, pseud;  // labels 1..9
  };
  std::vector<ProjPoint> base9(P.base.begin(), P.base.end());
  base9.push_back(P.ninth);
  std::vector<GapData> gaps(n);
  for (int i = 0; i < n; i++) {
    CubicForm f = member_at(P, sample[i]);
    CubicTopology topo = smooth_cubic_topology(f, base9);
    GapData g;
    g.has_oval = topo.has_oval;
    for (int m : topo.oval_points) g.oval.push_back(m + 1);
    for (int m : topo.pseudoline_points) g.pseud.push_back(m + 1);
    gaps[i] = std::move(g);
  }
  {
    // the wrap gap must look the same from both ends of the line
    CubicForm f = member_at(P, -bound);
    CubicTopology topo = smooth_cubic_topology(f, base9);
    if (topo.has_oval != gaps[n - 1].has_oval)
      throw Error("Internal", "wrap gap topology mismatch");
    if (topo.has_oval) {
      std::set<int> a(gaps[n - 1].oval.begin(), gaps[n - 1].oval.end());
      std::set<int> b;
      for (int m : topo.oval_points) b.insert(m + 1);
      if (a != b) throw Error("Internal", "wrap gap oval mismatch");
    }
  }

  for (int i = 0; i < n; i++) {
    const GapData& left = gaps[(i + n - 1) % n];
    const GapData& right = gaps[i];
    if (left.has_oval == right.has_oval)
      throw Error("TracingInconclusive", "oval alternation violated at a singular member");
    const GapData& oval_side = left.has_oval ? left : right;
    const GapData& merged = left.has_oval ? right : left;

    SingularMember m;
    m.t = AlgebraicReal(P.disc_sf, roots[i]);
    Rat tv;
    if (m.t.is_rational(&tv)) {
      m.t_rational = true;
      m.t_value = tv;
    }
    m.loop_points = oval_side.oval;
    if (m.loop_points.empty()) {
      int hess = certified_node_kind(P, m.t);
      m.kind = hess > 0 ? MemberKind::IsolatedNode : MemberKind::CrossingNode;
      if (m.kind == MemberKind::IsolatedNode)
        out.n_isolated++;
      else
        out.n_empty_loop++;
    } else {
      m.kind = MemberKind::CrossingNode;
      m.distinguished = true;
      out.n_distinguished++;
      // circuit: the loop block must be cyclically contiguous in the merged
      // pseudoline order
      const std::vector<int>& M = merged.pseud;
      int len = (int)M.size();
      if (len != 9) throw Error("Internal", "merged member misses base points");
      std::set<int> loop(m.loop_points.begin(), m.loop_points.end());
      int k = (int)loop.size();
      int start = -1;
      for (int s = 0; s < len; s++) {
        bool ok = true;
        for (int j = 0; j < k && ok; j++) ok = loop.count(M[(s + j) % len]) > 0;
        if (ok && (k == len || !loop.count(M[(s + len - 1) % len]))) {
          start = s;
          break;
        }
      }
      if (start < 0)
        throw Error("TracingInconclusive", "loop points not contiguous along the merged member");
      std::vector<int> circuit;
      circuit.push_back(0);
      for (int j = 0; j < k; j++) circuit.push_back(M[(start + j) % len]);
      circuit.push_back(0);
      for (int j = k; j < len; j++) circuit.push_back(M[(start + j) % len]);
      // consistency: the block and the oval-side loop agree as cyclic words
      {
        std::vector<int> block(circuit.begin() + 1, circuit.begin() + 1 + k);
        std::vector<int> ov = m.loop_points;
        if (canonical_circuit(block) != canonical_circuit(ov))
          throw Error("TracingInconclusive", "loop order mismatch between the two gap samples");
      }
      m.circuit = std::move(circuit);
    }
    out.members.push_back(std::move(m));
  }
  for (int i = 0; i < n; i++)
    if (out.members[i].distinguished) out.distinguished_order.push_back(i);

  // census identities
  if (out.n_real - 2 * out.n_isolated != 8)
    throw Error("Internal", "census identity n - 2 n1 = 8 violated");
  if (out.n_isolated != out.n_empty_loop)
    throw Error("Internal", "census identity n2 = n1 violated");
  if (out.n_distinguished != 8) throw Error("Internal", "census identity n3 = 8 violated");
  return out;
}

CombinatorialPencil combinatorial_pencil(const PencilAnalysis& a) {
  if (!a.generic) throw Error("NonGenericPencil", "combinatorial pencil needs a generic pencil");
  CombinatorialPencil out;
  for (int i : a.distinguished_order) out.circuits.push_back(a.members[i].circuit);
  int n = (int)out.circuits.size();
  std::string best;
  for (const D8& g : D8::all()) {
    // relabel 1..8 inside the circuits; 0 (node) and 9 stay fixed
    std::vector<std::vector<int>> rel(n);
    for (int i = 0; i < n; i++) {
      std::vector<int> w = out.circuits[i];
      for (int& s : w)
        if (s >= 1 && s <= 8) s = g.apply(s);
      rel[i] = canonical_circuit(w);
    }
    for (int rev = 0; rev < 2; rev++) {
      std::vector<std::vector<int>> seq = rel;
      if (rev) std::reverse(seq.begin(), seq.end());
      for (int rot = 0; rot < n; rot++) {
        std::string enc;
        for (int i = 0; i < n; i++) {
          for (int s : seq[(rot + i) % n]) enc += char('A' + s);
          enc += '|';
        }
        if (best.empty() || enc < best) best = enc;
      }
    }
  }
  out.canonical = best;
  return out;
}

DegenerationPrediction predict_degeneration(const ListCode& code) {
  // nodal lists are excluded
  static const std::vector<std::array<uint64_t, 3>> nodal_keys = [] {
    std::vector<std::array<uint64_t, 3>> keys;
    for (int n : kNodalOrbitLabels) {
      const PublishedList& pl = kPublishedLists[n - 1];
      std::array<SevenType, 8> ty;
      for (int i = 0; i < 7; i++) ty[i] = {pl.types[i].label, pl.types[i].sign};
      ty[7] = {pl.h8.label, pl.h8.sign};
      keys.push_back(canonical_form(table_from_types(ty)).first.key());
    }
    return keys;
  }();
  auto my = canonical_form(code.table).first.key();
  for (auto& k : nodal_keys)
    if (k == my) throw Error("NodalListInput", "nodal lists do not determine the degeneration");

  DegenerationPrediction out;
  SevenType h8 = code.types[7], h1 = code.types[0];
  int d81 = code.dist[7];
  if (d81 == 0) {
    out.nodal_limit = true;
    if (h8 == h1 && ((h8.label == 2 && h8.sign > 0) || (h8.label == 7 && h8.sign < 0)))
      out.maybe_non_real = true;
    if ((h8 == SevenType{1, 1} && h1 == SevenType{8, 1}) ||
        (h8 == SevenType{1, -1} && h1 == SevenType{8, -1})) {
      out.pair_names = {"(81,L),(81,C)", "(8+,1),(8-,78)", "(1+,12),(1-,8)"};
    } else if (h8 == h1 && !out.maybe_non_real) {
      int N = h8.label;
      std::string Ns = std::to_string(N);
      if (N == 7 && h8.sign > 0)
        out.pair_names = {"(7+,8),(1,7+)", "(78,C),(7+,1)"};
      else if (N == 2 && h8.sign < 0)
        out.pair_names = {"(2-,8),(12,C)", "(2-,1),(8,2-)"};
      else if (h8.sign > 0)
        out.pair_names = {"(" + Ns + "+,1),(8," + Ns + "+)", "(" + Ns + "+,8),(1," + Ns + "+)"};
      else
        out.pair_names = {"(" + Ns + "-,8),(1," + Ns + "-)", "(" + Ns + "-,1),(8," + Ns + "-)"};
    }
    return out;
  }
  // reducible limit: the first conic in the remaining chain of sub-list 1
  static const std::pair<int, int> upper_vals[7] = {{8, 1}, {6, -1}, {6, 1}, {4, -1},
                                                    {4, 1}, {2, -1}, {2, 1}};
  static const int upper_conics[6][5] = {{2, 3, 4, 5, 6}, {2, 3, 4, 5, 7}, {2, 3, 4, 6, 7},
                                         {2, 3, 5, 6, 7}, {2, 4, 5, 6, 7}, {3, 4, 5, 6, 7}};
  static const std::pair<int, int> lower_vals[7] = {{8, -1}, {3, 1}, {3, -1}, {5, 1},
                                                    {5, -1}, {7, 1}, {7, -1}};
  static const int lower_conics[6][5] = {{3, 4, 5, 6, 7}, {2, 4, 5, 6, 7}, {2, 3, 5, 6, 7},
                                         {2, 3, 4, 6, 7}, {2, 3, 4, 5, 7}, {2, 3, 4, 5, 6}};
  bool upper = h1.label == 8 ? h1.sign > 0 : h1.label % 2 == 0;
  const auto* vals = upper ? upper_vals : lower_vals;
  const auto* conics = upper ? upper_conics : lower_conics;
  int pos = -1;
  for (int i = 0; i < 7; i++)
    if (vals[i].first == h1.label && vals[i].second == h1.sign) pos = i;
  if (pos < 0 || pos >= 6)
    throw Error("Internal", "chain position not found for the reducible limit");
  int mask = 0;
  for (int j = 0; j < 5; j++) mask |= 1 << (conics[pos][j] - 1);
  out.conic_mask = mask;
  for (int x = 2; x <= 7; x++)
    if (!(mask & (1 << (x - 1)))) out.line_point = x;
  bool h8_flagset = (h8 == SevenType{1, 1}) || (h8 == SevenType{2, -1}) || h8.label == 4 ||
                    h8.label == 6;
  if (h8_flagset && h1 == SevenType{2, 1}) out.maybe_non_real = true;
  if (!out.maybe_non_real) {
    SevenType hp = code.types[out.line_point - 1];
    out.pair_names = {"(" + std::to_string(out.line_point) + "," + hp.name() + "),(" +
                      h1.name() + ",1)"};
  }
  return out;
}

}  // namespace octet
