#include "octet/realization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "octet/paper_data.hpp"
#include "octet/poly.hpp"

namespace octet {

ProjPoint circle_point(const Rat& u, const Rat& r) {
  Rat w = 1 + u * u;
  return ProjPoint(r * (1 - u * u) / w, r * 2 * u / w);
}

std::string config_brief(const Configuration& c) {
  std::string s;
  for (int i = 1; i <= 8; i++) {
    if (i > 1) s += " ";
    s += "(" + rat_to_string(c.at(i).ax()) + "," + rat_to_string(c.at(i).ay()) + ")";
  }
  return s;
}

// ----- convex position -----

ConvexReport check_convex_position(const std::array<ProjPoint, 8>& pts) {
  ConvexReport r;
  for (int i = 0; i < 8; i++) {
    if (sgn(pts[i].z) == 0) {
      r.error_kind = "NotConvex";
      r.witness = {i + 1, 0, 0};
      return r;
    }
    for (int j = i + 1; j < 8; j++)
      if (pts[i] == pts[j]) {
        r.error_kind = "NotConvex";
        r.witness = {i + 1, j + 1, 0};
        return r;
      }
  }
  for (int i = 0; i < 8; i++)
    for (int j = i + 1; j < 8; j++)
      for (int k = j + 1; k < 8; k++)
        if (orient(pts[i], pts[j], pts[k]) == 0) {
          r.error_kind = "ThreeCollinear";
          r.witness = {i + 1, j + 1, k + 1};
          return r;
        }
  // convex hull (monotone chain) over exact affine coordinates
  std::array<int, 8> idx;
  for (int i = 0; i < 8; i++) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    Rat ax = pts[a].ax(), bx = pts[b].ax();
    if (ax != bx) return ax < bx;
    return pts[a].ay() < pts[b].ay();
  });
  auto build = [&](bool upper) {
    std::vector<int> h;
    for (int t = 0; t < 8; t++) {
      int i = idx[upper ? 7 - t : t];
      while (h.size() >= 2 &&
             orient(pts[h[h.size() - 2]], pts[h[h.size() - 1]], pts[i]) <= 0)
        h.pop_back();
      h.push_back(i);
    }
    return h;
  };
  std::vector<int> lower = build(false), upper = build(true);
  std::vector<int> hull = lower;
  hull.pop_back();
  for (size_t i = 0; i + 1 < upper.size(); i++) hull.push_back(upper[i]);
  if (hull.size() != 8) {
    std::set<int> on(hull.begin(), hull.end());
    for (int i = 0; i < 8; i++)
      if (!on.count(i)) {
        r.error_kind = "NotConvex";
        r.witness = {i + 1, 0, 0};
        return r;
      }
  }
  for (int h : hull) r.hull_order.push_back(h + 1);
  // labels must be a rotation of the hull cycle, in either direction
  for (int dir = 0; dir < 2; dir++) {
    for (int s = 0; s < 8; s++) {
      bool match = true;
      for (int k = 0; k < 8; k++) {
        int want = dir == 0 ? r.hull_order[(s + k) % 8] : r.hull_order[(s - k + 16) % 8];
        if (want != k + 1) {
          match = false;
          break;
        }
      }
      if (match) {
        r.ok = true;
        return r;
      }
    }
  }
  r.error_kind = "LabelingNotCyclic";
  return r;
}

void require_convex(const Configuration& c) {
  ConvexReport r = check_convex_position(c.pts);
  if (!r.ok) {
    std::string msg = "witness";
    for (int w : r.witness)
      if (w) msg += " " + std::to_string(w);
    throw Error(r.error_kind.empty() ? "NotConvex" : r.error_kind, msg);
  }
}

// ----- tables -----

const Conic& ConicCache::of_subset(int s) const {
  if (!conics[s]) {
    const auto& i8 = TableIndex8::get();
    std::array<ProjPoint, 5> five;
    for (int k = 0; k < 5; k++) five[k] = cfg->at(i8.subset[s][k]);
    Conic c = conic_through(five);
    c.label = i8.subset[s];
    conics[s] = c;
  }
  return *conics[s];
}

static std::string subset_digits(int s) {
  const auto& i8 = TableIndex8::get();
  std::string d;
  for (int x : i8.subset[s]) d += char('0' + x);
  return d;
}

PositionTable compute_position_table(const Configuration& c) {
  const auto& i8 = TableIndex8::get();
  ConicCache cache(c);
  PositionTable t;
  for (int s = 0; s < 56; s++) {
    const Conic& k = cache.of_subset(s);
    for (int slot = 0; slot < 3; slot++) {
      int p = i8.off[s][slot];
      Side side = point_conic_side(k, c.at(p));
      if (side == Side::On)
        throw Error("NonGenericOnConic",
                    "point " + std::to_string(p) + " on conic " + subset_digits(s));
      t.inside[i8.entry(s, slot)] = side == Side::Inside;
    }
  }
  return t;
}

// ----- coordinate simplification -----

Configuration simplify_points(const Configuration& c) {
  return simplify_points(c, compute_position_table(c));
}

namespace {

size_t point_bits(const ProjPoint& p) {
  return mpz_sizeinbase(p.x.get_mpz_t(), 2) + mpz_sizeinbase(p.y.get_mpz_t(), 2) +
         mpz_sizeinbase(p.z.get_mpz_t(), 2);
}

// Exact check that replacing point i by np keeps the table equal to
// `expected`; only the entries involving i are recomputed.
bool replacement_keeps_table(const Configuration& cur, const ConicCache& cache, int i,
                             const ProjPoint& np, const PositionTable& expected) {
  const auto& i8 = TableIndex8::get();
  Configuration trial = cur;
  trial.pts[i - 1] = np;
  if (!check_convex_position(trial.pts).ok) return false;
  try {
    // cheap pass first: conics avoiding i are unchanged and cached
    for (int s = 0; s < 56; s++) {
      bool through = false;
      for (int x : i8.subset[s]) through |= x == i;
      if (through) continue;
      Side side = point_conic_side(cache.of_subset(s), np);
      if (side == Side::On) return false;
      if ((side == Side::Inside) != (bool)expected.inside[i8.entry_of(s, i)]) return false;
    }
    for (int s = 0; s < 56; s++) {
      bool through = false;
      for (int x : i8.subset[s]) through |= x == i;
      if (!through) continue;
      std::array<ProjPoint, 5> five;
      for (int k = 0; k < 5; k++) five[k] = trial.at(i8.subset[s][k]);
      Conic k5 = conic_through(five);
      for (int slot = 0; slot < 3; slot++) {
        Side side = point_conic_side(k5, trial.at(i8.off[s][slot]));
        if (side == Side::On) return false;
        if ((side == Side::Inside) != (bool)expected.inside[i8.entry(s, slot)]) return false;
      }
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

}  // namespace

Configuration simplify_points(const Configuration& c, const PositionTable& expected) {
  Configuration cur = c;
  for (int i = 1; i <= 8; i++) {
    if (point_bits(cur.at(i)) < 48) continue;  // already simple
    auto cxs = cf_convergents(cur.at(i).ax());
    auto cys = cf_convergents(cur.at(i).ay());
    ConicCache cache(cur);
    struct Cand {
      Rat x, y;
      size_t bits;
    };
    std::vector<Cand> cands;
    for (const Rat& x : cxs)
      for (const Rat& y : cys) {
        if (x == cur.at(i).ax() && y == cur.at(i).ay()) continue;
        size_t bits = mpz_sizeinbase(x.get_den().get_mpz_t(), 2) +
                      mpz_sizeinbase(y.get_den().get_mpz_t(), 2) +
                      mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
                      mpz_sizeinbase(y.get_num().get_mpz_t(), 2);
        cands.push_back({x, y, bits});
      }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.bits < b.bits; });
    int budget = 20;
    for (const Cand& cd : cands) {
      if (budget-- <= 0) break;
      ProjPoint np(cd.x, cd.y);
      if (replacement_keeps_table(cur, cache, i, np, expected)) {
        cur.pts[i - 1] = np;
        break;
      }
    }
  }
  cur.provenance = c.provenance;
  return cur;
}

// ----- segment mover -----


Configuration move_point_across(const Configuration& c, int p, const Rat& tx, const Rat& ty,
                                int subset_mask, bool snap) {
  PositionTable old_table = compute_position_table(c);
  ConicCache cache(c);
  return move_point_across(c, old_table, cache, p, tx, ty, subset_mask, snap);
}

namespace {

struct WallQuadratic {
  Rat a, b, c;  // value along the segment: a t^2 + b t + c
  int sign_at(const Rat& t) const { return sgn(Rat((a * t + b) * t + c)); }
  double eval_d(double t) const {
    return (a.get_d() * t + b.get_d()) * t + c.get_d();
  }
};

struct SegmentWalls {
  std::vector<WallQuadratic> walls;
  int target = -1;  // index of the target conic wall
};

SegmentWalls build_walls(const Configuration& c, const ConicCache& cache, int p, const Rat& dx,
                         const Rat& dy, int s_target) {
  const auto& i8 = TableIndex8::get();
  Rat px = c.at(p).ax(), py = c.at(p).ay();
  SegmentWalls out;
  for (int s = 0; s < 56; s++) {
    bool off = false;
    for (int k = 0; k < 3; k++) off |= i8.off[s][k] == p;
    if (!off) continue;
    const auto& q = cache.of_subset(s).c;
    WallQuadratic w;
    w.a = Rat(q[0]) * dx * dx + Rat(q[1]) * dx * dy + Rat(q[2]) * dy * dy;
    w.b = 2 * Rat(q[0]) * px * dx + Rat(q[1]) * (px * dy + py * dx) +
          2 * Rat(q[2]) * py * dy + Rat(q[3]) * dx + Rat(q[4]) * dy;
    w.c = Rat(q[0]) * px * px + Rat(q[1]) * px * py + Rat(q[2]) * py * py + Rat(q[3]) * px +
          Rat(q[4]) * py + Rat(q[5]);
    if (s == s_target) out.target = (int)out.walls.size();
    out.walls.push_back(w);
  }
  for (int i = 1; i <= 8; i++) {
    if (i == p) continue;
    for (int j = i + 1; j <= 8; j++) {
      if (j == p) continue;
      Rat xi = c.at(i).ax(), yi = c.at(i).ay();
      Rat xj = c.at(j).ax(), yj = c.at(j).ay();
      WallQuadratic w;
      w.a = 0;
      w.b = dx * (yi - yj) - dy * (xi - xj);
      w.c = px * (yi - yj) - py * (xi - xj) + (xi * yj - xj * yi);
      out.walls.push_back(w);
    }
  }
  return out;
}

// Roots of a wall quadratic inside (0, 1), ascending, as doubles (guidance
// only; all decisions are exact sign checks).
void float_roots(const WallQuadratic& w, std::vector<double>& out) {
  double a = w.a.get_d(), b = w.b.get_d(), c = w.c.get_d();
  auto push = [&](double r) {
    if (r > 1e-15 && r < 1 - 1e-15) out.push_back(r);
  };
  if (std::abs(a) < 1e-300) {
    if (std::abs(b) > 1e-300) push(-c / b);
    return;
  }
  double disc = b * b - 4 * a * c;
  if (disc < 0) return;
  double sq = std::sqrt(disc);
  // numerically stable pair
  double q = -0.5 * (b + (b >= 0 ? sq : -sq));
  push(q / a);
  if (std::abs(q) > 1e-300) push(c / q);
}

}  // namespace

Configuration move_point_across(const Configuration& c, const PositionTable& old_table,
                                const ConicCache& cache, int p, const Rat& tx, const Rat& ty,
                                int subset_mask, bool snap) {
  const auto& i8 = TableIndex8::get();
  if (subset_mask & (1 << (p - 1))) throw Error("Internal", "moving point lies on the conic");
  int s_target = i8.index_of_mask[subset_mask];
  if (s_target < 0) throw Error("Internal", "bad subset mask");

  PositionTable expected = flip_six(old_table, subset_mask | (1 << (p - 1)));

  Rat px = c.at(p).ax(), py = c.at(p).ay();
  Rat dx = tx - px, dy = ty - py;
  if (sgn(dx) == 0 && sgn(dy) == 0) throw Error("Internal", "zero motion");

  SegmentWalls sw = build_walls(c, cache, p, dx, dy, s_target);
  std::vector<int> s0(sw.walls.size());
  for (size_t w = 0; w < sw.walls.size(); w++) {
    s0[w] = sw.walls[w].sign_at(Rat(0));
    if (s0[w] == 0) throw Error("Internal", "wall active at start");
  }

  // Exact number of roots of a wall quadratic in the open interval (0, t);
  // assumes nonzero values at both ends.
  auto roots_in = [](const WallQuadratic& w, const Rat& hi, int sign_lo, int sign_hi) {
    if (sign_lo != sign_hi) return 1;  // odd count in (0, hi) and degree <= 2
    if (sgn(w.a) == 0) return 0;
    Rat disc = w.b * w.b - 4 * w.a * w.c;
    if (sgn(disc) <= 0) return 0;
    Rat vert = -w.b / (2 * w.a);
    if (!(vert > 0 && vert < hi)) return 0;
    // both roots inside iff the endpoints sit outside the root span
    return sgn(w.a) == sign_lo ? 2 : 0;
  };
  // Candidate landing parameters: float guidance, exact acceptance. Accepted
  // iff the target was crossed exactly once and nothing else was crossed:
  // the landing lies strictly past the first target crossing and strictly
  // before any other wall.
  auto accepted = [&](const Rat& t) {
    int st = sw.walls[sw.target].sign_at(t);
    if (st != -s0[sw.target]) return false;
    for (size_t w = 0; w < sw.walls.size(); w++) {
      int swt = sw.walls[w].sign_at(t);
      if ((int)w == sw.target) continue;
      if (swt != s0[w]) return false;
      if (roots_in(sw.walls[w], t, s0[w], swt) != 0) return false;
    }
    return true;
  };

  std::vector<double> target_roots;
  float_roots(sw.walls[sw.target], target_roots);
  if (target_roots.empty()) throw Error("WrongFirstWall", "target conic not crossed");
  std::sort(target_roots.begin(), target_roots.end());
  double r1 = target_roots[0];
  double r2 = 1.0;
  for (size_t w = 0; w < sw.walls.size(); w++) {
    std::vector<double> rs;
    float_roots(sw.walls[w], rs);
    for (double r : rs)
      if (r > r1 + 1e-14 && r < r2) r2 = r;
  }
  if (!(r1 < r2)) throw Error("WrongFirstWall", "no room past the target crossing");

  Rat t_land;
  bool found = false;
  // prefer simple landing parameters: simplest rational in a shrinking
  // window inside the float estimate of (first target root, next wall)
  for (int shrink = 0; shrink < 10 && !found; shrink++) {
    double margin = (r2 - r1) * (shrink + 1) / 24.0;
    double lo = r1 + margin, hi = r2 - margin;
    if (!(lo < hi)) break;
    long den = 1L << 40;
    Rat rlo((long)std::ceil(lo * (double)den), den), rhi((long)std::floor(hi * (double)den), den);
    if (!(sgn(rlo) > 0 && rhi < 1 && rlo < rhi)) continue;
    Rat cand = simplest_rational_between(rlo, rhi);
    if (accepted(cand)) {
      t_land = cand;
      found = true;
    }
  }
  for (int k = 1; k <= 16 && !found; k++) {
    double guess = r1 + (r2 - r1) * k / 17.0;
    double w = (r2 - r1) / 64;
    long lo = (long)std::floor((guess - w) * 1e12);
    long hi = (long)std::ceil((guess + w) * 1e12);
    if (hi <= lo) hi = lo + 1;
    Rat rlo(lo, 1000000000000L), rhi(hi, 1000000000000L);
    if (!(sgn(rlo) > 0 && rhi < 1 && rlo < rhi)) continue;
    Rat cand = simplest_rational_between(rlo, rhi);
    if (accepted(cand)) {
      t_land = cand;
      found = true;
    }
  }
  if (!found) {
    // dyadic scan restricted to a window past the float estimate of the
    // first target crossing
    double wlo = std::max(0.0, r1 - 0.02), whi = std::min(1.0, r2 + 0.02);
    for (int depth = 4; depth <= 14 && !found; depth++) {
      long den = 1L << depth;
      for (long num = (long)(wlo * den) | 1; num < (long)(whi * den) + 2 && num < den;
           num += 2) {
        if (num <= 0) continue;
        Rat t(num, den);
        if (accepted(t)) {
          t_land = t;
          found = true;
          break;
        }
      }
    }
  }
  if (!found) throw Error("WrongFirstWall", "no certified landing parameter");

  Configuration out = c;
  Rat nx = px + t_land * dx, ny = py + t_land * dy;
  out.pts[p - 1] = ProjPoint(nx, ny);
  auto verify = [&](const Configuration& cand) {
    if (!check_convex_position(cand.pts).ok) return false;
    try {
      return compute_position_table(cand) == expected;
    } catch (const Error&) {
      return false;
    }
  };
  if (!verify(out)) throw Error("CertificationFailed", "landed configuration has wrong table");

  if (snap) out = simplify_points(out, expected);
  out.provenance = c.provenance;
  out.provenance.push_back("move p" + std::to_string(p) + " across " + subset_digits(s_target));
  return out;
}

Configuration move_until_crossing(const Configuration& c, int p, int toward_label,
                                  int subset_mask) {
  if (toward_label != p % 8 + 1 && p != toward_label % 8 + 1)
    throw Error("Internal", "target point not consecutive");
  return move_point_across(c, p, c.at(toward_label).ax(), c.at(toward_label).ay(), subset_mask);
}

// ----- extremal seeds -----

Configuration realize_extremal_h8(const SevenType& type, bool maximal) {
  const auto& i8 = TableIndex8::get();
  int fin = 0, gout = 0;
  for (const auto& bp : kSevenBoldPairs) {
    SevenType t = parse_type(bp.type);
    if (t.label == type.label && t.sign == type.sign) {
      fin = bp.in_point;
      gout = bp.out_point;
    }
  }
  if (!fin) throw Error("TargetNotExtremal", "unknown seven-point type");
  static const Rat us[8] = {Rat(-5, 2), Rat(-1), Rat(-1, 2), Rat(-1, 5),
                            Rat(1, 5),  Rat(1, 2), Rat(1),   Rat(5, 2)};
  for (int de = 4; de <= 10; de += 2) {
    for (int ee = de + 8; ee <= de + 20; ee += 4) {
      Rat eps = Rat(1, Int(1) << ee), del = Rat(1, Int(1) << de);
      Configuration c;
      for (int i = 1; i <= 8; i++) {
        Rat scale(1);
        if (i == fin) scale = 1 - eps;
        if (i == gout) scale = 1 + eps;
        if (i == 8) scale = maximal ? Rat(1 + del) : Rat(1 - del);
        c.pts[i - 1] = circle_point(us[i - 1], scale);
      }
      try {
        if (!check_convex_position(c.pts).ok) continue;
        PositionTable t = compute_position_table(c);
        SevenType got = seven_type_of(t, 8);
        if (got != type) continue;
        bool extremal = true;
        for (int s = 0; s < 56 && extremal; s++) {
          // only conics determined by five of 1..7
          bool within7 = true;
          for (int x : i8.subset[s]) within7 &= x != 8;
          if (!within7) continue;
          bool inside = t.inside[i8.entry_of(s, 8)];
          if (inside == maximal) extremal = false;
        }
        if (!extremal) continue;
        c.provenance.push_back("extremal seed h8=" + type.name() +
                               (maximal ? " max" : " min"));
        return simplify_points(c);
      } catch (const Error&) {
        continue;
      }
    }
  }
  throw Error("SeedInvalid", "could not realize extremal list for h8=" + type.name());
}

// ----- six-point conics -----

int count_six_point_conics(const Configuration& c, std::vector<int>* masks) {
  // all eight coconic?
  {
    std::array<ProjPoint, 6> six;
    bool all8 = true;
    for (int m = 0; m < 256 && all8; m++) {
      if (__builtin_popcount(m) != 6) continue;
      int k = 0;
      for (int b = 0; b < 8; b++)
        if (m & (1 << b)) six[k++] = c.pts[b];
      if (!coconic(six)) all8 = false;
    }
    if (all8) return -1;
  }
  for (int m = 0; m < 256; m++) {
    if (__builtin_popcount(m) != 7) continue;
    // seven coconic iff every 6-subset of them is coconic
    bool seven = true;
    for (int drop = 0; drop < 8 && seven; drop++) {
      if (!(m & (1 << drop))) continue;
      std::array<ProjPoint, 6> six;
      int k = 0;
      for (int b = 0; b < 8; b++)
        if ((m & (1 << b)) && b != drop) six[k++] = c.pts[b];
      if (!coconic(six)) seven = false;
    }
    if (seven) throw Error("SevenCoconic", "seven points lie on one conic");
  }
  int count = 0;
  for (int m = 0; m < 256; m++) {
    if (__builtin_popcount(m) != 6) continue;
    std::array<ProjPoint, 6> six;
    int k = 0;
    for (int b = 0; b < 8; b++)
      if (m & (1 << b)) six[k++] = c.pts[b];
    if (coconic(six)) {
      count++;
      if (masks) masks->push_back(m);
    }
  }
  return count;
}

// ----- four-reducible configurations -----

Configuration four_reducible_config(int variant) {
  if (variant == 1) {
    Configuration c;
    c.pts[0] = ProjPoint(Rat(1), Rat(1));
    c.pts[1] = ProjPoint(Rat(9, 8), Rat(0));
    c.pts[2] = ProjPoint(Rat(1), Rat(-1));
    c.pts[3] = ProjPoint(Rat(0), Rat(-2));
    c.pts[4] = ProjPoint(Rat(-1), Rat(-1));
    c.pts[5] = ProjPoint(Rat(-9, 8), Rat(0));
    c.pts[6] = ProjPoint(Rat(-1), Rat(1));
    c.pts[7] = ProjPoint(Rat(0), Rat(2));
    c.provenance.push_back("four-reducible wall, variant 1");
    require_convex(c);
    return c;
  }
  if (variant != 2) throw Error("Internal", "variant must be 1 or 2");

  // Two conics through the four points 2,4,5,7 of the circle x^2+y^2=25;
  // 3,6 cut on the circle by a line through 9, 1,8 on the second conic.
  auto line = [](const ProjPoint& a, const ProjPoint& b) {
    // coefficients (u, v, w) of u x + v y + w z
    std::array<Rat, 3> l;
    l[0] = a.ay() - b.ay();
    l[1] = b.ax() - a.ax();
    l[2] = a.ax() * b.ay() - b.ax() * a.ay();
    return l;
  };
  auto meet = [](const std::array<Rat, 3>& l, const std::array<Rat, 3>& m) {
    Rat x = l[1] * m[2] - l[2] * m[1];
    Rat y = l[2] * m[0] - l[0] * m[2];
    Rat z = l[0] * m[1] - l[1] * m[0];
    if (sgn(z) == 0) throw Error("Internal", "parallel lines");
    return ProjPoint(x / z, y / z);
  };

  const Rat r(5);
  std::vector<std::array<Rat, 4>> anchor_sets = {
      {Rat(1, 2), Rat(2), Rat(-2), Rat(-2, 5)},
      {Rat(1, 2), Rat(3), Rat(-3), Rat(-1, 3)},
      {Rat(2, 5), Rat(2), Rat(-3), Rat(-1, 2)},
      {Rat(1, 3), Rat(3), Rat(-2), Rat(-2, 5)},
  };
  std::vector<Rat> lambdas = {Rat(1, 8),  Rat(-1, 8),  Rat(1, 16), Rat(-1, 16),
                              Rat(1, 4),  Rat(-1, 4),  Rat(1, 32), Rat(-1, 32),
                              Rat(1, 64), Rat(-1, 64), Rat(1, 2),  Rat(-1, 2)};
  std::vector<Rat> slopes8;
  for (int num = -9; num <= 9; num++)
    for (int den = 1; den <= 5; den++) slopes8.push_back(Rat(num, den));

  for (const auto& anc : anchor_sets) {
    ProjPoint p2 = circle_point(anc[0], r), p4 = circle_point(anc[1], r),
              p5 = circle_point(anc[2], r), p7 = circle_point(anc[3], r);
    ProjPoint p9;
    try {
      p9 = meet(line(p2, p7), line(p4, p5));
    } catch (const Error&) {
      continue;
    }
    auto l24 = line(p2, p4), l57 = line(p5, p7);
    for (const Rat& lam : lambdas) {
      // E2 = circle + lam * L24 * L57 in quadratic-form coordinates
      std::array<Rat, 6> q;  // A,B,C,D,E,F
      q[0] = 1 + lam * l24[0] * l57[0];
      q[1] = lam * (l24[0] * l57[1] + l24[1] * l57[0]);
      q[2] = 1 + lam * l24[1] * l57[1];
      q[3] = lam * (l24[0] * l57[2] + l24[2] * l57[0]);
      q[4] = lam * (l24[1] * l57[2] + l24[2] * l57[1]);
      q[5] = -25 + lam * l24[2] * l57[2];
      // bounded, nondegenerate: leading block definite
      if (sgn(q[0]) <= 0 || sgn(Rat(4 * q[0] * q[2] - q[1] * q[1])) <= 0) continue;
      auto e2_eval = [&](const ProjPoint& p) -> Rat {
        Rat x = p.ax(), y = p.ay();
        return Rat(q[0] * x * x + q[1] * x * y + q[2] * y * y + q[3] * x + q[4] * y + q[5]);
      };
      // candidates for 6 on the circle arc between 5 and 7
      std::vector<Rat> u6s;
      for (int i = 1; i <= 7; i++) u6s.push_back(anc[2] + Rat(i, 8) * (anc[3] - anc[2]));
      for (const Rat& u6 : u6s) {
        ProjPoint p6 = circle_point(u6, r);
        // 3 = second intersection of line(9,6) with the circle
        Rat x9 = p9.ax(), y9 = p9.ay(), x6 = p6.ax(), y6 = p6.ay();
        Rat ddx = x6 - x9, ddy = y6 - y9;
        // (x9 + t ddx)^2 + (y9 + t ddy)^2 = 25, one root at t=1
        Rat A = ddx * ddx + ddy * ddy, B = 2 * (x9 * ddx + y9 * ddy),
            C = x9 * x9 + y9 * y9 - 25;
        // roots multiply to C/A and sum to -B/A; t=1 known
        Rat t3 = C / A;  // since t=1 is a root, other root = C/A
        if (A + B + C != 0) continue;  // 6 not on circle? (never)
        ProjPoint p3(x9 + t3 * ddx, y9 + t3 * ddy);
        if (sgn(e2_eval(p3)) <= 0 || sgn(e2_eval(p6)) <= 0) continue;  // need outside E2
        for (const Rat& m8 : slopes8) {
          // 8 on E2: second intersection of the line through 2 with slope m8
          Rat x2 = p2.ax(), y2 = p2.ay();
          Rat A8 = q[0] + q[1] * m8 + q[2] * m8 * m8;
          if (sgn(A8) == 0) continue;
          // substitute x = x2 + s, y = y2 + m8 s
          Rat B8 = 2 * q[0] * x2 + q[1] * (y2 + m8 * x2) + 2 * q[2] * m8 * y2 + q[3] +
                   q[4] * m8;
          Rat s8 = -B8 / A8;  // other root (one root s=0 at point 2)
          if (sgn(s8) == 0) continue;
          ProjPoint p8(x2 + s8, y2 + m8 * s8);
          // 1 = second intersection of line(9,8) with E2
          Rat x8 = p8.ax(), y8 = p8.ay();
          Rat ex = x8 - x9, ey = y8 - y9;
          Rat A1 = q[0] * ex * ex + q[1] * ex * ey + q[2] * ey * ey;
          if (sgn(A1) == 0) continue;
          Rat B1 = 2 * q[0] * x9 * ex + q[1] * (x9 * ey + y9 * ex) + 2 * q[2] * y9 * ey +
                   q[3] * ex + q[4] * ey;
          Rat C1 = e2_eval(p9);
          if (sgn(A1 + B1 + C1) != 0) continue;  // 8 must be on E2 (t=1 root)
          Rat t1 = C1 / A1;
          ProjPoint p1(x9 + t1 * ex, y9 + t1 * ey);
          Configuration c;
          c.pts = {p1, p2, p3, p4, p5, p6, p7, p8};
          if (!check_convex_position(c.pts).ok) continue;
          std::vector<int> masks;
          int k;
          try {
            k = count_six_point_conics(c, &masks);
          } catch (const Error&) {
            continue;
          }
          if (k != 4) continue;
          auto maskof = [](std::initializer_list<int> pts) {
            int m = 0;
            for (int p : pts) m |= 1 << (p - 1);
            return m;
          };
          std::set<int> want = {maskof({2, 3, 4, 5, 6, 7}), maskof({1, 2, 4, 5, 7, 8}),
                                maskof({1, 2, 3, 6, 7, 8}), maskof({1, 3, 4, 5, 6, 8})};
          if (std::set<int>(masks.begin(), masks.end()) != want) continue;
          c.provenance.push_back("four-reducible wall, variant 2");
          return c;
        }
      }
    }
  }
  throw Error("SeedInvalid", "variant-2 search exhausted");
}

// ----- wall perturbations -----

namespace {

// Sides of point p relative to the conics through the listed 5-subsets after
// displacing p by (dx, dy). Returns empty if any side is On.
std::vector<Side> sides_after(const Configuration& c, int p, const Rat& dx, const Rat& dy,
                              const std::vector<int>& subsets) {
  const auto& i8 = TableIndex8::get();
  Configuration moved = c;
  moved.pts[p - 1] = ProjPoint(c.at(p).ax() + dx, c.at(p).ay() + dy);
  std::vector<Side> out;
  for (int mask : subsets) {
    int s = i8.index_of_mask[mask];
    std::array<ProjPoint, 5> five;
    for (int k = 0; k < 5; k++) five[k] = moved.at(i8.subset[s][k]);
    Conic k5 = conic_through(five);
    Side side = point_conic_side(k5, moved.at(p));
    if (side == Side::On) return {};
    out.push_back(side);
  }
  return out;
}

int maskof(std::initializer_list<int> pts) {
  int m = 0;
  for (int p : pts) m |= 1 << (p - 1);
  return m;
}

const std::vector<std::pair<Rat, Rat>>& displacement_grid() {
  static const std::vector<std::pair<Rat, Rat>> grid = [] {
    std::vector<std::pair<Rat, Rat>> g;
    std::vector<std::pair<int, int>> dirs;
    for (int a = -8; a <= 8; a++)
      for (int b = -8; b <= 8; b++) {
        if (a == 0 && b == 0) continue;
        if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
        dirs.push_back({a, b});
      }
    for (int e : {8, 12, 16, 20})
      for (auto [a, b] : dirs) g.push_back({Rat(a, Int(1) << e), Rat(b, Int(1) << e)});
    return g;
  }();
  return grid;
}

// Directions spaced between the tangent rays of the constraint conics at the
// point they pass through; one candidate lands in every sign sector.
std::vector<std::pair<Rat, Rat>> sector_directions(const Configuration& c, int p,
                                                   const std::vector<int>& subsets) {
  const auto& i8 = TableIndex8::get();
  std::vector<std::pair<Rat, Rat>> rays;
  Rat px = c.at(p).ax(), py = c.at(p).ay();
  for (int mask : subsets) {
    int s = i8.index_of_mask[mask];
    std::array<ProjPoint, 5> five;
    for (int k = 0; k < 5; k++) five[k] = c.at(i8.subset[s][k]);
    Conic k5 = conic_through(five);
    if (sgn(k5.eval(c.at(p))) != 0) continue;  // not a wall for this point
    const auto& q = k5.c;
    Rat gx = 2 * Rat(q[0]) * px + Rat(q[1]) * py + Rat(q[3]);
    Rat gy = Rat(q[1]) * px + 2 * Rat(q[2]) * py + Rat(q[4]);
    if (sgn(gx) == 0 && sgn(gy) == 0) continue;
    rays.push_back({-gy, gx});
    rays.push_back({gy, -gx});
    rays.push_back({gx, gy});  // normals help the k=1 case and thin sectors
    rays.push_back({-gx, -gy});
  }
  if (rays.empty()) return {};
  auto half = [](const std::pair<Rat, Rat>& d) {
    return sgn(d.second) > 0 || (sgn(d.second) == 0 && sgn(d.first) > 0) ? 0 : 1;
  };
  std::sort(rays.begin(), rays.end(), [&](const auto& a, const auto& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return sgn(Rat(a.first * b.second - a.second * b.first)) > 0;
  });
  std::vector<std::pair<Rat, Rat>> out;
  for (size_t i = 0; i < rays.size(); i++) {
    auto &a = rays[i], &b = rays[(i + 1) % rays.size()];
    Rat na = abs(a.first) + abs(a.second), nb = abs(b.first) + abs(b.second);
    Rat mx = a.first / na + b.first / nb, my = a.second / na + b.second / nb;
    if (sgn(mx) != 0 || sgn(my) != 0) out.push_back({mx, my});
    out.push_back({a.first / na, a.second / na});  // on-ray probes resolve ties
  }
  return out;
}

// Sides of `point` relative to the conics of `subsets` in configuration c.
bool sides_ok(const Configuration& c, int point, const std::vector<int>& subsets,
              const std::vector<Side>& want) {
  const auto& i8 = TableIndex8::get();
  for (size_t i = 0; i < subsets.size(); i++) {
    int s = i8.index_of_mask[subsets[i]];
    std::array<ProjPoint, 5> five;
    for (int k = 0; k < 5; k++) five[k] = c.at(i8.subset[s][k]);
    Conic k5 = conic_through(five);
    if (point_conic_side(k5, c.at(point)) != want[i]) return false;
  }
  return true;
}

// Move point p so that its sides relative to `subsets` match `want` and the
// predicate `extra` holds on the displaced configuration.
std::optional<Configuration> displace_to(
    const Configuration& c, int p, const std::vector<int>& subsets, const std::vector<Side>& want,
    const std::function<bool(const Configuration&)>& extra = nullptr) {
  auto attempt = [&](const Rat& dx, const Rat& dy) -> std::optional<Configuration> {
    auto sides = sides_after(c, p, dx, dy, subsets);
    if (sides.size() == want.size() && std::equal(sides.begin(), sides.end(), want.begin())) {
      Configuration out = c;
      out.pts[p - 1] = ProjPoint(c.at(p).ax() + dx, c.at(p).ay() + dy);
      out.provenance = c.provenance;
      if (extra && !extra(out)) return std::nullopt;
      return out;
    }
    return std::nullopt;
  };
  for (auto& [dx, dy] : sector_directions(c, p, subsets)) {
    for (int e : {8, 12, 16, 20, 24, 28}) {
      Rat s = Rat(1, Int(1) << e);
      if (auto r = attempt(dx * s, dy * s)) return r;
    }
  }
  for (auto& [dx, dy] : displacement_grid()) {
    if (auto r = attempt(dx, dy)) return r;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Configuration> four_reducible_perturbations(int variant) {
  Configuration wall = four_reducible_config(variant);
  std::vector<Configuration> out;
  auto finish = [&](std::optional<Configuration> c2, const std::string& note) {
    if (!c2) return;
    if (!check_convex_position(c2->pts).ok) return;
    try {
      compute_position_table(*c2);
    } catch (const Error&) {
      return;
    }
    c2->provenance.push_back(note);
    out.push_back(*c2);
  };
  if (variant == 1) {
    std::vector<int> sub8 = {maskof({1, 3, 4, 5, 7}), maskof({2, 3, 4, 6, 7}),
                             maskof({1, 2, 4, 5, 6})};
    for (int pat = 0; pat < 8; pat++) {
      std::vector<Side> want;
      for (int b = 0; b < 3; b++)
        want.push_back((pat >> b) & 1 ? Side::Inside : Side::Outside);
      auto c1 = displace_to(wall, 8, sub8, want);
      if (!c1) continue;
      // moving 3 moves conics through 3; re-check 8's pattern afterwards
      auto c2 = displace_to(*c1, 3, {maskof({1, 2, 5, 6, 7})}, {Side::Outside},
                            [&](const Configuration& f) { return sides_ok(f, 8, sub8, want); });
      finish(c2, "variant-1 perturbation pattern " + std::to_string(pat));
    }
  } else {
    std::vector<int> sub8 = {maskof({1, 3, 4, 5, 6}), maskof({1, 2, 4, 5, 7}),
                             maskof({1, 2, 3, 6, 7})};
    for (int pat = 0; pat < 8; pat++) {
      std::vector<Side> want;
      for (int b = 0; b < 3; b++)
        want.push_back((pat >> b) & 1 ? Side::Inside : Side::Outside);
      auto c1 = displace_to(wall, 8, sub8, want);
      if (!c1) continue;
      auto c2 = displace_to(*c1, 7, {maskof({2, 3, 4, 5, 6})}, {Side::Inside},
                            [&](const Configuration& f) { return sides_ok(f, 8, sub8, want); });
      finish(c2, "variant-2 perturbation pattern " + std::to_string(pat));
    }
    // the two extra recipes
    std::vector<int> sub7 = {maskof({1, 2, 4, 5, 8}), maskof({1, 2, 3, 6, 8}),
                             maskof({2, 3, 4, 5, 6})};
    for (Side free7 : {Side::Inside, Side::Outside}) {
      std::vector<Side> want7 = {Side::Outside, Side::Inside, free7};
      auto c1 = displace_to(wall, 7, sub7, want7);
      if (!c1) continue;
      auto c2 = displace_to(*c1, 8, {maskof({1, 3, 4, 5, 6})}, {Side::Outside},
                            [&](const Configuration& f) { return sides_ok(f, 7, sub7, want7); });
      finish(c2, "variant-2 extra recipe (7 first)");
    }
    std::vector<int> sub6 = {maskof({2, 3, 4, 5, 7}), maskof({1, 2, 3, 7, 8}),
                             maskof({1, 3, 4, 5, 8})};
    for (Side free6 : {Side::Inside, Side::Outside}) {
      std::vector<Side> want6 = {Side::Outside, Side::Inside, free6};
      auto c1 = displace_to(wall, 6, sub6, want6);
      if (!c1) continue;
      auto c2 = displace_to(*c1, 8, {maskof({1, 2, 4, 5, 7})}, {Side::Outside},
                            [&](const Configuration& f) { return sides_ok(f, 6, sub6, want6); });
      finish(c2, "variant-2 extra recipe (6 first)");
    }
  }
  return out;
}

}  // namespace octet
