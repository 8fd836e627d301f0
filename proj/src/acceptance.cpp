#include "octet/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "octet/atlas.hpp"
#include "octet/paper_data.hpp"
#include "octet/pencil.hpp"

namespace octet {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::array<SevenType, 8> published_types(int n) {
  const PublishedList& pl = kPublishedLists[n - 1];
  std::array<SevenType, 8> t;
  for (int i = 0; i < 7; i++) t[i] = {pl.types[i].label, pl.types[i].sign};
  t[7] = {pl.h8.label, pl.h8.sign};
  return t;
}

PositionTable published_table(int n) { return table_from_types(published_types(n)); }

// random convex n-gon with rational coordinates; labels counterclockwise
template <size_t N>
bool random_convex(std::mt19937_64& rng, std::array<ProjPoint, N>& out) {
  std::vector<double> ang(N);
  for (auto& a : ang) a = std::uniform_real_distribution<>(0, 6.2831853)(rng);
  std::sort(ang.begin(), ang.end());
  for (size_t i = 0; i < N; i++) {
    double gap = (i + 1 < N ? ang[i + 1] : ang[0] + 6.2831853) - ang[i];
    if (gap < 0.04) return false;
  }
  for (size_t i = 0; i < N; i++) {
    double u = std::tan(ang[i] / 2);
    if (!std::isfinite(u) || std::abs(u) > 60) return false;
    Rat ur((long)std::llround(u * 65536.0), 65536);
    Rat r(58982 + (long)(rng() % 13108), 65536);
    Rat w = 1 + ur * ur;
    out[i] = ProjPoint(Rat(r * (1 - ur * ur) / w), Rat(r * 2 * ur / w));
  }
  for (size_t i = 0; i < N; i++)
    if (orient(out[i], out[(i + 1) % N], out[(i + 2) % N]) <= 0) return false;
  return true;
}

// Nodal cubic through seven points with the node at one of them.
CubicForm nodal_cubic_through(const Configuration& cfg, int node_label) {
  std::vector<std::array<Int, 10>> rows;
  auto cubic_row = [](const ProjPoint& p) {
    std::array<Int, 10> r;
    for (int m = 0; m < 10; m++) {
      Int t = 1;
      for (int e = 0; e < CubicForm::kMonomials[m][0]; e++) t *= p.x;
      for (int e = 0; e < CubicForm::kMonomials[m][1]; e++) t *= p.y;
      for (int e = 0; e < CubicForm::kMonomials[m][2]; e++) t *= p.z;
      r[m] = t;
    }
    return r;
  };
  for (int i = 1; i <= 7; i++) rows.push_back(cubic_row(cfg.at(i)));
  // vanishing gradient at the node (two independent partials)
  const ProjPoint& q = cfg.at(node_label);
  for (int var = 0; var < 2; var++) {
    std::array<Int, 10> r{};
    for (int m = 0; m < 10; m++) {
      int e[3] = {CubicForm::kMonomials[m][0], CubicForm::kMonomials[m][1],
                  CubicForm::kMonomials[m][2]};
      if (e[var] == 0) continue;
      Int coef = e[var];
      e[var]--;
      Int t = coef;
      for (int k = 0; k < e[0]; k++) t *= q.x;
      for (int k = 0; k < e[1]; k++) t *= q.y;
      for (int k = 0; k < e[2]; k++) t *= q.z;
      r[m] = t;
    }
    rows.push_back(r);
  }
  // one-dimensional kernel by rational elimination
  std::vector<std::vector<Rat>> a(rows.size(), std::vector<Rat>(10));
  for (size_t i = 0; i < rows.size(); i++)
    for (int j = 0; j < 10; j++) a[i][j] = Rat(rows[i][j]);
  std::vector<int> piv;
  size_t r = 0;
  for (int c = 0; c < 10 && r < rows.size(); c++) {
    size_t pv = r;
    while (pv < rows.size() && sgn(a[pv][c]) == 0) pv++;
    if (pv == rows.size()) continue;
    std::swap(a[r], a[pv]);
    Rat d = a[r][c];
    for (int j = 0; j < 10; j++) a[r][j] /= d;
    for (size_t i = 0; i < rows.size(); i++) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rat f = a[i][c];
      for (int j = 0; j < 10; j++) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    r++;
  }
  if (r != 9) throw Error("Internal", "nodal cubic system rank " + std::to_string(r));
  int fc = -1;
  for (int c = 0; c < 10; c++)
    if (std::find(piv.begin(), piv.end(), c) == piv.end()) fc = c;
  std::array<Rat, 10> v{};
  v[fc] = 1;
  for (size_t i = 0; i < piv.size(); i++) v[piv[i]] = -a[i][fc];
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
}

// Distinct canonical pencils over the chamber of a nodal orbit, found by
// sampling the moving point across the subchamber walls (the seven nodal
// cubics with node at one of the fixed points plus the two bounding conics).
std::set<std::string> nodal_pencil_classes(const Atlas& a, int label, int jobs,
                                           const std::function<void(const std::string&)>& log) {
  SevenType type;
  switch (label) {
    case 64: type = {8, -1}; break;
    case 32: type = {8, +1}; break;
    case 48: type = {6, -1}; break;
    case 56: type = {6, +1}; break;
    default: throw Error("Internal", "not a nodal label");
  }
  int node_idx = extremal_node(a, 1, type, true);
  if (node_idx < 0) throw Error("Internal", "extremal member not found in atlas");
  const AtlasNode& nd = a.node(node_idx);
  Configuration base = nd.realization;
  PositionTable want = nd.table;

  // walls relevant to the moving point 8
  std::vector<CubicForm> cubics;
  for (int k = 1; k <= 7; k++) cubics.push_back(nodal_cubic_through(base, k));
  auto conic_of = [&](std::initializer_list<int> pts) {
    std::array<ProjPoint, 5> five;
    int i = 0;
    for (int p : pts) five[i++] = base.at(p);
    return conic_through(five);
  };
  Conic c14567 = conic_of({1, 4, 5, 6, 7});
  Conic c34567 = conic_of({3, 4, 5, 6, 7});

  // candidate positions for point 8: crossों of several transversal segments
  // with the walls, sampled between consecutive crossings
  std::vector<std::pair<Rat, Rat>> candidates;
  Rat p8x = base.at(8).ax(), p8y = base.at(8).ay();
  std::vector<std::pair<Rat, Rat>> anchors;
  {
    Rat cx(0), cy(0);
    for (int i = 3; i <= 7; i++) {
      cx += base.at(i).ax();
      cy += base.at(i).ay();
    }
    anchors.push_back({cx / 5, cy / 5});
    cx = cy = 0;
    for (int i = 1; i <= 7; i++) {
      cx += base.at(i).ax();
      cy += base.at(i).ay();
    }
    anchors.push_back({cx / 7, cy / 7});
    anchors.push_back({(base.at(1).ax() + base.at(2).ax()) / 2,
                       (base.at(1).ay() + base.at(2).ay()) / 2});
    anchors.push_back({(base.at(7).ax() + base.at(1).ax()) / 2,
                       (base.at(7).ay() + base.at(1).ay()) / 2});
  }
  for (auto& [ax, ay] : anchors) {
    // X(t) = anchor + t (p8 - anchor), t in (0, 2.5)
    double dx = Rat(p8x - ax).get_d();
    double dy = Rat(p8y - ay).get_d();
    std::vector<double> ts = {1.0};
    auto add_curve_roots = [&](const std::function<double(double, double)>& f) {
      // scan for sign changes on a fine grid (guidance only; every candidate
      // is verified exactly against the wanted table)
      double prev = f(ax.get_d(), ay.get_d());
      const int M = 400;
      for (int i = 1; i <= M; i++) {
        double t = 2.5 * i / M;
        double v = f(ax.get_d() + t * dx, ay.get_d() + t * dy);
        if ((prev < 0) != (v < 0)) ts.push_back(2.5 * (i - 0.5) / M);
        prev = v;
      }
    };
    for (auto& cub : cubics)
      add_curve_roots([&](double x, double y) {
        double acc = 0;
        for (int m = 0; m < 10; m++)
          acc += cub.c[m].get_d() * std::pow(x, CubicForm::kMonomials[m][0]) *
                 std::pow(y, CubicForm::kMonomials[m][1]);
        return acc;
      });
    for (const Conic* k : {&c14567, &c34567})
      add_curve_roots([&](double x, double y) {
        const auto& q = k->c;
        return q[0].get_d() * x * x + q[1].get_d() * x * y + q[2].get_d() * y * y +
               q[3].get_d() * x + q[4].get_d() * y + q[5].get_d();
      });
    std::sort(ts.begin(), ts.end());
    std::vector<double> mids;
    for (size_t i = 0; i + 1 < ts.size(); i++)
      if (ts[i + 1] - ts[i] > 1e-6) mids.push_back((ts[i] + ts[i + 1]) / 2);
    mids.push_back(ts.back() + 0.1);
    mids.push_back(ts.front() / 2);
    for (double t : mids) {
      Rat tr((long)std::llround(t * (1 << 16)), 1 << 16);
      candidates.push_back({ax + tr * (p8x - ax), ay + tr * (p8y - ay)});
    }
  }
  // in-chamber filter (exact): configuration must realize the same list
  std::vector<Configuration> samples;
  samples.push_back(base);
  for (auto& [x, y] : candidates) {
    Configuration c = base;
    try {
      c.pts[7] = ProjPoint(x, y);
      if (!check_convex_position(c.pts).ok) continue;
      if (compute_position_table(c) != want) continue;
      samples.push_back(c);
    } catch (const Error&) {
    }
  }
  if (log)
    log("  nodal orbit L" + std::to_string(label) + ": " + std::to_string(samples.size()) +
        " in-chamber samples");
  std::vector<std::string> canon(samples.size());
  auto work = [&](int i) {
    try {
      canon[i] = combinatorial_pencil(analyze_pencil(samples[i].pts)).canonical;
    } catch (const Error&) {
      canon[i] = "";
    }
  };
#ifdef _OPENMP
  if (jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < (int)samples.size(); i++) work(i);
  } else {
    for (int i = 0; i < (int)samples.size(); i++) work(i);
  }
#else
  for (int i = 0; i < (int)samples.size(); i++) work(i);
#endif
  std::set<std::string> out;
  for (auto& s : canon)
    if (!s.empty()) out.insert(s);
  return out;
}

std::string hist_text(const std::map<int, int>& h) {
  std::string s = "{";
  for (auto& [k, v] : h) s += std::to_string(k) + ":" + std::to_string(v) + " ";
  s += "}";
  return s;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> results;
  auto log = [&](const std::string& s) {
    if (opt.log) opt.log(s);
  };
  auto push = [&](int id, const std::string& name, bool pass, const std::string& detail,
                  double secs) {
    results.push_back({id, name, pass, detail, secs});
    log(std::string(pass ? "[PASS] " : "[FAIL] ") + "criterion " + std::to_string(id) + " (" +
        name + "): " + detail);
  };

  // ---- criterion 1: atlas closure ----
  Clock::time_point t0 = Clock::now();
  Atlas atlas;
  {
    auto seeds = default_seeds();
    BuildOptions bo;
    bo.jobs = opt.jobs;
    atlas = build_atlas(seeds, bo);
    double secs = since(t0);
    std::ostringstream d;
    d << "lists=" << atlas.nodes.size() << " orbits=" << atlas.orbits.size() << " in " << secs
      << "s (stated: 784 lists, 49 orbits, <60s)";
    push(1, "atlas closure from the 12 extremal orbits",
         atlas.nodes.size() == 784 && atlas.orbits.size() == 49 && secs < 60, d.str(), secs);
  }

  // ---- criterion 2: published octuples row for row ----
  t0 = Clock::now();
  {
    int rows_realized = 0, rows_octuple_ok = 0;
    std::set<int> orbit_ids;
    for (int i = 0; i < kPublishedOctupleCount; i++) {
      int n = kPublishedOctuples[i].n;
      PositionTable t = published_table(n);
      int node = atlas.node_of(t);
      if (node < 0) continue;
      rows_realized++;
      orbit_ids.insert(atlas.nodes[node].orbit);
      if (atlas.nodes[node].code.dist == kPublishedOctuples[i].d &&
          atlas.nodes[node].code.sigma == kPublishedOctuples[i].sigma)
        rows_octuple_ok++;
    }
    std::map<int, int> hist;
    for (auto& o : atlas.orbits) {
      int member = o.members.front();
      hist[std::abs(atlas.nodes[member].code.sigma)]++;
    }
    bool hist_ok = hist == std::map<int, int>{{0, 16}, {2, 12}, {4, 16}, {6, 4}, {8, 1}};
    bool bijective = orbit_ids.size() == 49 && atlas.orbits.size() == 49;
    std::ostringstream d;
    d << rows_octuple_ok << "/49 published rows realized with exact octuples; rows map onto "
      << orbit_ids.size() << " distinct orbits of " << atlas.orbits.size()
      << " (stated: bijection with 49); |sigma| histogram over orbits " << hist_text(hist)
      << " (stated {0:16 2:12 4:16 6:4 8:1})";
    push(2, "distance octuples row-for-row", rows_octuple_ok == 49 && bijective && hist_ok,
         d.str(), since(t0));
  }

  // ---- criterion 3: octuple decoding ----
  t0 = Clock::now();
  {
    std::map<std::array<int, 8>, int> counts;
    for (auto& n : atlas.nodes) counts[n.code.dist]++;
    int collisions = 0;
    for (auto& [oct, c] : counts)
      if (c > 1) collisions++;
    bool inj = collisions == 0 && atlas.nodes.size() == 784;
    int decoded = 0;
    for (auto& n : atlas.nodes) {
      try {
        if (&decode_from_octuple(atlas, n.code.dist) == &n) decoded++;
      } catch (const Error&) {
      }
    }
    std::ostringstream d;
    d << counts.size() << " distinct octuples over " << atlas.nodes.size() << " lists, "
      << collisions << " octuples shared by two lists (stated: 784 pairwise distinct); "
      << decoded << " lists decode uniquely";
    push(3, "octuple decoding bijection", inj, d.str(), since(t0));
  }

  // ---- criterion 4: nodal orbits ----
  t0 = Clock::now();
  {
    std::set<int> nodal_labels;
    int nodal_count = 0;
    for (size_t i = 0; i < atlas.orbits.size(); i++)
      if (is_nodal_orbit(atlas, (int)i)) {
        nodal_count++;
        for (int l : atlas.orbits[i].published_labels) nodal_labels.insert(l);
      }
    // the four maximal orbits carry the labels 64, 32, 48, 56
    bool ok = nodal_count == 4 &&
              nodal_labels == std::set<int>{32, 48, 56, 64};
    // confirm extremal structure: each nodal orbit contains the stated
    // maximal member
    std::string fams;
    for (auto [label, ty, mx] :
         {std::tuple<int, SevenType, bool>{64, {8, -1}, true},
          {32, {8, 1}, true},
          {48, {6, -1}, true},
          {56, {6, 1}, true}}) {
      int node = extremal_node(atlas, 1, ty, mx);
      ok = ok && node >= 0 && is_nodal_orbit(atlas, atlas.nodes[node].orbit);
      (void)label;
    }
    std::ostringstream d;
    d << nodal_count << " nodal orbits, labels {";
    for (int l : nodal_labels) d << "L" << l << " ";
    d << "} = the maximal orbits (8-,2+),(8+,2-),(6-,4+),(6+,4-)";
    push(4, "nodal orbits are the four maximal orbits", ok, d.str(), since(t0));
  }

  // ---- criterion 5: elementary change census and induct replays ----
  t0 = Clock::now();
  {
    ChangeCensus cen = elementary_change_census(atlas);
    // representative changes all occur
    int reps_found = 0;
    {
      std::set<std::string> patterns;
      for (const auto& n : atlas.nodes)
        for (auto& [mask, j] : n.edges) {
          int f = -1, g = -1;
          for (int x = 1; x <= 8; x++)
            if (!(mask & (1 << (x - 1)))) (f < 0 ? f : g) = x;
          std::string key = std::to_string(f) + ":" + n.code.types[f - 1].name() + ">" +
                            atlas.nodes[j].code.types[f - 1].name() + "/" + std::to_string(g) +
                            ":" + n.code.types[g - 1].name() + ">" +
                            atlas.nodes[j].code.types[g - 1].name();
          patterns.insert(key);
        }
      for (int i = 0; i < kRepresentativeChangeCount; i++) {
        const auto& rc = kRepresentativeChanges[i];
        std::string key = std::to_string(rc.sub_a) + ":" +
                          SevenType{rc.a_from.label, rc.a_from.sign}.name() + ">" +
                          SevenType{rc.a_to.label, rc.a_to.sign}.name() + "/" +
                          std::to_string(rc.sub_b) + ":" +
                          SevenType{rc.b_from.label, rc.b_from.sign}.name() + ">" +
                          SevenType{rc.b_to.label, rc.b_to.sign}.name();
        if (patterns.count(key)) reps_found++;
      }
    }
    // replay the inductive construction rows geometrically
    int rows_ok = 0, rows_total = 0;
    for (const auto& row : induct_sequences()) {
      rows_total++;
      try {
        int start = row.at(0).a;
        int node = atlas.node_of(published_table(start));
        if (node < 0) throw Error("Internal", "start list missing");
        Configuration cfg = atlas.nodes[node].realization;
        PositionTable cur = atlas.nodes[node].table;
        for (size_t s = 1; s + 1 < row.size(); s += 2) {
          const InductStep& step = row[s];
          const InductStep& target = row[s + 1];
          if (step.kind == InductStep::Change) {
            int mask = 255 & ~(1 << (step.a - 1)) & ~(1 << (step.b - 1));
            ConicCache cache(cfg);
            cfg = certify_crossing(cfg, cur, cache, mask);
            cur = flip_six(cur, mask);
          } else {
            D8 g = D8::axis(step.a, step.b);
            Configuration moved;
            for (int i = 1; i <= 8; i++) moved.pts[g.apply(i) - 1] = cfg.at(i);
            cfg = moved;
            cur = apply_d8(g, cur);
          }
          if (cur != published_table(target.a))
            throw Error("Internal", "replay diverged at L" + std::to_string(target.a));
          if (compute_position_table(cfg) != cur)
            throw Error("Internal", "replay realization mismatch");
        }
        rows_ok++;
      } catch (const Error& e) {
        log(std::string("  induct replay failed: ") + e.what());
      }
    }
    std::ostringstream d;
    d << cen.directed_patterns << " elementary pairs (stated 224) in " << cen.pattern_orbits
      << " D8-orbits (stated 19); " << reps_found << "/19 published representatives occur; "
      << rows_ok << "/" << rows_total << " construction rows replay with certified realizations";
    push(5, "elementary change census and inductive replays",
         cen.directed_patterns == 224 && cen.pattern_orbits == 19 && rows_ok == rows_total,
         d.str(), since(t0));
  }

  // ---- criterion 6: seven-point classification sampling ----
  t0 = Clock::now();
  {
    std::mt19937_64 rng(opt.seed);
    const auto& i7 = TableIndex7::get();
    int wanted = 10000;
    int valid = 0, matched = 0;
    std::set<int> seen;
    while (valid < wanted) {
      std::array<ProjPoint, 7> pts;
      if (!random_convex<7>(rng, pts)) continue;
      Bits42 t;
      bool generic = true;
      for (int s = 0; s < 21 && generic; s++) {
        std::array<ProjPoint, 5> five;
        for (int k = 0; k < 5; k++) five[k] = pts[i7.subset[s][k] - 1];
        try {
          Conic c = conic_through(five);
          for (int k = 0; k < 2; k++) {
            Side side = point_conic_side(c, pts[i7.off[s][k] - 1]);
            if (side == Side::On) {
              generic = false;
              break;
            }
            t[i7.entry(s, k)] = side == Side::Inside;
          }
        } catch (const Error&) {
          generic = false;
        }
      }
      if (!generic) continue;
      valid++;
      try {
        seen.insert(classify_seven_table(t));
        matched++;
      } catch (const Error&) {
      }
    }
    std::ostringstream d;
    d << matched << "/" << valid << " random convex 7-point configurations match exactly one "
      << "reference table; " << seen.size() << "/14 types occur";
    push(6, "seven-point classification over random samples",
         matched == valid && seen.size() == 14, d.str(), since(t0));
  }

  // ---- criterion 7: pencil census over random configurations ----
  t0 = Clock::now();
  {
    int wanted = opt.quick ? 12 : 100;
    std::mt19937_64 rng(opt.seed + 1);
    std::vector<std::array<ProjPoint, 8>> cfgs;
    while ((int)cfgs.size() < wanted) {
      std::array<ProjPoint, 8> pts;
      if (!random_convex<8>(rng, pts)) continue;
      Configuration c;
      c.pts = pts;
      try {
        compute_position_table(c);
      } catch (const Error&) {
        continue;
      }
      cfgs.push_back(pts);
    }
    std::vector<int> ok(cfgs.size(), 0);
    std::vector<double> secs(cfgs.size(), 0);
    auto work = [&](int i) {
      auto w0 = Clock::now();
      try {
        PencilAnalysis a = analyze_pencil(cfgs[i]);
        ok[i] = a.generic && (a.n_real == 8 || a.n_real == 10 || a.n_real == 12) &&
                a.n_real - 2 * a.n_isolated == 8 && a.n_isolated == a.n_empty_loop &&
                a.n_distinguished == 8;
      } catch (const Error&) {
        ok[i] = 0;
      }
      secs[i] = since(w0);
    };
#ifdef _OPENMP
    if (opt.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
      for (int i = 0; i < (int)cfgs.size(); i++) work(i);
    } else {
      for (int i = 0; i < (int)cfgs.size(); i++) work(i);
    }
#else
    for (int i = 0; i < (int)cfgs.size(); i++) work(i);
#endif
    int good = 0;
    double worst = 0;
    for (size_t i = 0; i < cfgs.size(); i++) {
      good += ok[i];
      worst = std::max(worst, secs[i]);
    }
    std::ostringstream d;
    d << good << "/" << cfgs.size() << " random pencils satisfy n in {8,10,12}, n-2n1=8, n2=n1, "
      << "n3=8; worst per-configuration time " << worst << "s (stated <10s)";
    push(7, "pencil census over random configurations",
         good == (int)cfgs.size() && worst < 10.0, d.str(), since(t0));
  }

  // ---- criteria 8 and 9 share the nodal machinery ----
  t0 = Clock::now();
  std::map<int, std::set<std::string>> nodal_classes;
  {
    bool mult_ok = true;
    std::ostringstream d;
    for (int i = 0; i < 4; i++) {
      int label = kNodalOrbitLabels[i];
      nodal_classes[label] = nodal_pencil_classes(atlas, label, opt.jobs, opt.log);
      d << "L" << label << ":" << nodal_classes[label].size() << " ";
      if ((int)nodal_classes[label].size() != kNodalPencilMultiplicity[i]) mult_ok = false;
    }
    // Prop 6 direction: two independent realizations of a non-nodal list
    // produce identical canonical pencils
    int pairs_ok = 0, pairs_total = 0;
    int want_pairs = opt.quick ? 4 : 10;
    for (size_t oi = 0; oi < atlas.orbits.size() && pairs_total < want_pairs; oi++) {
      if (is_nodal_orbit(atlas, (int)oi)) continue;
      pairs_total++;
      const AtlasOrbit& o = atlas.orbits[oi];
      int n0 = o.members[0];
      // second realization: relabel another member back onto the same list
      int n1 = -1;
      D8 back;
      for (size_t m = 1; m < o.members.size() && n1 < 0; m++) {
        for (const D8& g : D8::all()) {
          if (apply_d8(g, atlas.nodes[o.members[m]].table) == atlas.nodes[n0].table) {
            n1 = o.members[m];
            back = g;
            break;
          }
        }
      }
      if (n1 < 0) {
        pairs_ok = -1000000;
        continue;
      }
      Configuration second;
      for (int i = 1; i <= 8; i++)
        second.pts[back.apply(i) - 1] = atlas.nodes[n1].realization.at(i);
      try {
        std::string a = combinatorial_pencil(analyze_pencil(atlas.nodes[n0].realization.pts))
                            .canonical;
        std::string b = combinatorial_pencil(analyze_pencil(second.pts)).canonical;
        if (a == b && !a.empty()) pairs_ok++;
      } catch (const Error& e) {
        log(std::string("  prop-6 pair failed: ") + e.what());
      }
    }
    bool ok = mult_ok && pairs_ok == pairs_total;
    d << "; " << pairs_ok << "/" << pairs_total
      << " non-nodal orbits give identical pencils from independent realizations";
    push(8, "pencil determinacy and nodal multiplicities 9/3/2/2", ok, d.str(), since(t0));
  }

  // ---- criterion 9: total canonical pencil classes ----
  t0 = Clock::now();
  {
    std::set<std::string> classes;
    for (auto& [label, cls] : nodal_classes) classes.insert(cls.begin(), cls.end());
    size_t nodal_union = classes.size();
    std::vector<int> orbit_ids;
    for (size_t oi = 0; oi < atlas.orbits.size(); oi++)
      if (!is_nodal_orbit(atlas, (int)oi)) orbit_ids.push_back((int)oi);
    std::vector<std::string> canon(orbit_ids.size());
    auto work = [&](int i) {
      const AtlasOrbit& o = atlas.orbits[orbit_ids[i]];
      try {
        canon[i] = combinatorial_pencil(
                       analyze_pencil(atlas.nodes[o.members.front()].realization.pts))
                       .canonical;
      } catch (const Error&) {
        canon[i] = "<error>";
      }
    };
#ifdef _OPENMP
    if (opt.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
      for (int i = 0; i < (int)orbit_ids.size(); i++) work(i);
    } else {
      for (int i = 0; i < (int)orbit_ids.size(); i++) work(i);
    }
#else
    for (int i = 0; i < (int)orbit_ids.size(); i++) work(i);
#endif
    std::map<int, std::string> by_label;
    int errors = 0;
    for (size_t i = 0; i < orbit_ids.size(); i++) {
      if (canon[i] == "<error>") errors++;
      classes.insert(canon[i]);
      int l = atlas.orbits[orbit_ids[i]].principal_label;
      if (l) by_label[l] = canon[i];
    }
    // published equal-pencil identities
    int ident_ok = 0;
    for (auto& [n, m] : kEqualPencilPairs)
      if (by_label.count(n) && by_label.count(m) && by_label[n] == by_label[m]) ident_ok++;
    std::ostringstream d;
    d << classes.size() << " canonical combinatorial pencil classes (stated 45): "
      << nodal_union << " nodal + " << orbit_ids.size() << " non-nodal orbit pencils ("
      << errors << " errors); " << ident_ok << "/" << kEqualPencilPairs.size()
      << " published pencil identities hold";
    push(9, "total pencil classification", classes.size() == 45 && errors == 0,
         d.str(), since(t0));
  }

  // ---- criterion 10: four-reducible configurations ----
  t0 = Clock::now();
  {
    bool ok = true;
    std::ostringstream d;
    for (int variant : {1, 2}) {
      Configuration wall = four_reducible_config(variant);
      int k = count_six_point_conics(wall);
      ok = ok && k == 4;
      auto cfgs = four_reducible_perturbations(variant);
      std::set<int> got;
      for (auto& c : cfgs) {
        int node = atlas.node_of(compute_position_table(c));
        if (node >= 0) got.insert(atlas.orbits[atlas.nodes[node].orbit].principal_label);
      }
      std::set<int> want = variant == 1 ? std::set<int>{88, 92}
                                        : std::set<int>{11, 12, 13, 14, 19, 20, 21, 22};
      // the published variant-1 targets 88,90,92,(+2)94 collapse onto the
      // orbits labeled 88 and 92
      ok = ok && k == 4;
      for (int w : want) ok = ok && got.count(w);
      d << "variant " << variant << ": k=" << k << ", orbits {";
      for (int g : got) d << "L" << g << " ";
      d << "}; ";
    }
    push(10, "four-reducible walls and their perturbations", ok, d.str(), since(t0));
  }

  // ---- criterion 11: trivial stabilizers ----
  t0 = Clock::now();
  {
    int trivial = 0;
    for (auto& n : atlas.nodes) trivial += stabilizer(n.table).size() == 1;
    push(11, "generic lists have trivial stabilizer", trivial == (int)atlas.nodes.size(),
         std::to_string(trivial) + "/" + std::to_string(atlas.nodes.size()), since(t0));
  }

  // ---- criterion 12: oracle equivalences ----
  t0 = Clock::now();
  {
    std::mt19937_64 rng(opt.seed + 2);
    // (a) side predicate vs the secant-count oracle
    int side_ok = 0, side_total = 0;
    while (side_total < 100) {
      std::array<ProjPoint, 5> five;
      bool good = true;
      for (auto& p : five)
        p = ProjPoint(Rat((long)(rng() % 2001) - 1000, 97), Rat((long)(rng() % 2001) - 1000, 89));
      Conic k;
      try {
        k = conic_through(five);
        if (k.inertia_pos == 3 || k.inertia_neg == 3) continue;
      } catch (const Error&) {
        continue;
      }
      ProjPoint q(Rat((long)(rng() % 2001) - 1000, 83), Rat((long)(rng() % 2001) - 1000, 79));
      Side side;
      try {
        side = point_conic_side(k, q);
      } catch (const Error&) {
        continue;
      }
      if (side == Side::On) continue;
      side_total++;
      // oracle: count real intersections of sampled lines through q
      int missing = 0;
      for (int d2 = 0; d2 < 50; d2++) {
        Rat dx(d2 + 1, 7), dy(50 - d2, 11);
        Rat px = q.ax(), py = q.ay();
        const auto& c = k.c;
        Rat A = Rat(c[0]) * dx * dx + Rat(c[1]) * dx * dy + Rat(c[2]) * dy * dy;
        Rat B = 2 * Rat(c[0]) * px * dx + Rat(c[1]) * (px * dy + py * dx) +
                2 * Rat(c[2]) * py * dy + Rat(c[3]) * dx + Rat(c[4]) * dy;
        Rat C = Rat(c[0]) * px * px + Rat(c[1]) * px * py + Rat(c[2]) * py * py +
                Rat(c[3]) * px + Rat(c[4]) * py + Rat(c[5]);
        Rat disc = B * B - 4 * A * C;
        if (sgn(A) != 0 && sgn(disc) < 0) missing++;
      }
      bool oracle_inside = missing == 0;
      // Inside points see only secants; outside points miss along some line
      if ((side == Side::Inside) == oracle_inside) side_ok++;
    }
    // (b) ninth point vs a floating intersection oracle
    int ninth_ok = 0, ninth_total = 0;
    std::mt19937_64 rng2(opt.seed + 3);
    while (ninth_total < 10) {
      std::array<ProjPoint, 8> pts;
      if (!random_convex<8>(rng2, pts)) continue;
      ninth_total++;
      try {
        Pencil p = pencil_through(pts);
        // oracle: refine a float root of the y-resultant near the exact value
        double nx = p.ninth.ax().get_d(), ny = p.ninth.ay().get_d();
        double f0 = 0, f1 = 0;
        {
          // Newton on (f0, f1) from a perturbed start
          double x = nx + 1e-3, y = ny - 1e-3;
          for (int it = 0; it < 80; it++) {
            auto ev = [&](const CubicForm& f, double xx, double yy) {
              double acc = 0;
              for (int m = 0; m < 10; m++)
                acc += f.c[m].get_d() * std::pow(xx, CubicForm::kMonomials[m][0]) *
                       std::pow(yy, CubicForm::kMonomials[m][1]);
              return acc;
            };
            double v0 = ev(p.f0, x, y), v1 = ev(p.f1, x, y);
            double h = 1e-7;
            double j00 = (ev(p.f0, x + h, y) - ev(p.f0, x - h, y)) / (2 * h);
            double j01 = (ev(p.f0, x, y + h) - ev(p.f0, x, y - h)) / (2 * h);
            double j10 = (ev(p.f1, x + h, y) - ev(p.f1, x - h, y)) / (2 * h);
            double j11 = (ev(p.f1, x, y + h) - ev(p.f1, x, y - h)) / (2 * h);
            double det = j00 * j11 - j01 * j10;
            if (std::abs(det) < 1e-18) break;
            x -= (j11 * v0 - j01 * v1) / det;
            y -= (j00 * v1 - j10 * v0) / det;
          }
          f0 = x;
          f1 = y;
        }
        if (std::abs(f0 - nx) < 1e-8 * (1 + std::abs(nx)) &&
            std::abs(f1 - ny) < 1e-8 * (1 + std::abs(ny)))
          ninth_ok++;
      } catch (const Error&) {
      }
    }
    // (c) gradients vs finite differences
    int grad_ok = 0;
    for (int it = 0; it < 20; it++) {
      CubicForm f;
      for (int i = 0; i < 10; i++) f.c[i] = (long)(rng() % 19) - 9;
      if (f.is_zero()) {
        grad_ok++;
        continue;
      }
      double x = 0.31 + it * 0.07, y = -1.2 + it * 0.05;
      auto ev = [&](double xx, double yy) {
        double acc = 0;
        for (int m = 0; m < 10; m++)
          acc += f.c[m].get_d() * std::pow(xx, CubicForm::kMonomials[m][0]) *
                 std::pow(yy, CubicForm::kMonomials[m][1]);
        return acc;
      };
      ProjPoint p(Rat((long)std::llround(x * 100), 100), Rat((long)std::llround(y * 100), 100));
      auto g = f.gradient(p);
      double px = p.ax().get_d(), py = p.ay().get_d();
      double h = 1e-6;
      double gx = (ev(px + h, py) - ev(px - h, py)) / (2 * h);
      double gy = (ev(px, py + h) - ev(px, py - h)) / (2 * h);
      // the exact gradient is computed on the integer representative; compare
      // the direction (projective scaling drops out)
      double ex = g[0].get_d(), ey = g[1].get_d();
      double cross = std::abs(ex * gy - ey * gx);
      double norm = std::max(1.0, std::abs(ex) * std::abs(gy) + std::abs(ey) * std::abs(gx));
      if (cross / norm < 1e-6) grad_ok++;
    }
    std::ostringstream d;
    d << "side-vs-secant " << side_ok << "/" << side_total << "; ninth-point-vs-numeric "
      << ninth_ok << "/" << ninth_total << "; gradient-vs-finite-difference " << grad_ok
      << "/20";
    push(12, "oracle equivalences", side_ok == side_total && ninth_ok == ninth_total &&
                                        grad_ok == 20,
         d.str(), since(t0));
  }

  // ---- criterion 13: Pappus smoke test ----
  t0 = Clock::now();
  {
    auto nine = pappus_configuration();
    std::array<ProjPoint, 8> eight;
    for (int i = 0; i < 8; i++) eight[i] = nine[i];
    bool ok = false;
    std::string detail;
    try {
      Pencil p = pencil_through(eight);
      bool ninth_ok = p.ninth == nine[8];
      auto reds = reducible_census(p);
      int completely = 0;
      for (auto& r : reds) completely += r.completely_reducible;
      ok = ninth_ok && completely == 3;
      detail = "ninth point recovered: " + std::string(ninth_ok ? "yes" : "no") + ", " +
               std::to_string(completely) + " completely reducible members (stated 3)";
    } catch (const Error& e) {
      detail = e.what();
    }
    push(13, "Pappus pencil smoke test", ok, detail, since(t0));
  }

  return results;
}

}  // namespace octet
