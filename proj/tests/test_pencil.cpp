#include <iostream>
#include <set>

#include "doctest.h"
#include "octet/curve_topology.hpp"
#include "octet/paper_data.hpp"
#include "octet/pencil.hpp"

using namespace octet;

static CubicForm cubic(std::initializer_list<long> cs) {
  CubicForm f;
  int i = 0;
  for (long c : cs) f.c[i++] = c;
  f.canonicalize();
  return f;
}

TEST_CASE("cubic discriminant value calibration") {
  // basis order: x3, x2y, x2z, xy2, xyz, xz2, y3, y2z, yz2, z3
  CubicForm nodal = cubic({-1, 0, -1, 0, 0, 0, 0, 1, 0, 0});  // y^2 z = x^2 (x + z)
  CHECK(cubic_disc_value(nodal) == 0);
  CubicForm cusp = cubic({-1, 0, 0, 0, 0, 0, 0, 1, 0, 0});  // y^2 z = x^3
  CHECK(cubic_disc_value(cusp) == 0);
  CubicForm fermat = cubic({1, 0, 0, 0, 0, 0, 1, 0, 0, 1});
  CHECK(cubic_disc_value(fermat) != 0);
  CubicForm weier = cubic({-1, 0, 0, 0, 0, -1, 0, 1, 0, -1});  // y^2 z = x^3 + x z^2 + z^3
  CHECK(cubic_disc_value(weier) != 0);
  CubicForm isolated = cubic({-1, 0, 1, 0, 0, 0, 0, 1, 0, 0});  // y^2 z = x^2 (x - z)
  CHECK(cubic_disc_value(isolated) == 0);
}

TEST_CASE("smooth cubic topology: two-component curve") {
  // y^2 z = x^3 - x z^2: oval over x in [-1,0], odd branch from x = 1
  CubicForm f = cubic({-1, 0, 0, 0, 0, 1, 0, 1, 0, 0});
  std::vector<ProjPoint> marked = {ProjPoint(Rat(-1), Rat(0)), ProjPoint(Rat(0), Rat(0)),
                                   ProjPoint(Rat(1), Rat(0))};
  CubicTopology t = smooth_cubic_topology(f, marked);
  CHECK(t.has_oval);
  std::set<int> oval(t.oval_points.begin(), t.oval_points.end());
  CHECK(oval == std::set<int>{0, 1});
  CHECK(t.pseudoline_points == std::vector<int>{2});
}

TEST_CASE("smooth cubic topology: one-component curve") {
  // y^2 z = x^3 + x z^2: single branch through (0,0)
  CubicForm f = cubic({-1, 0, 0, 0, 0, -1, 0, 1, 0, 0});
  std::vector<ProjPoint> marked = {ProjPoint(Rat(0), Rat(0))};
  CubicTopology t = smooth_cubic_topology(f, marked);
  CHECK(!t.has_oval);
  CHECK(t.pseudoline_points == std::vector<int>{0});
}

TEST_CASE("pencil through the variant-1 wall has ninth point at the origin") {
  Configuration c = four_reducible_config(1);
  Pencil p = pencil_through(c.pts);
  CHECK(p.ninth == ProjPoint(Rat(0), Rat(0)));
  CHECK(sgn(p.f0.eval(p.ninth)) == 0);
  CHECK(sgn(p.f1.eval(p.ninth)) == 0);
  auto reds = reducible_census(p);
  CHECK(reds.size() == 4);
  std::set<std::set<int>> lines;
  int completely = 0;
  for (auto& r : reds) {
    lines.insert({r.line[0], r.line[1], r.line[2]});
    completely += r.completely_reducible;
  }
  CHECK(completely == 0);
  CHECK(lines == std::set<std::set<int>>{{4, 8, 9}, {2, 6, 9}, {3, 7, 9}, {1, 5, 9}});
}

TEST_CASE("pappus pencil has exactly three completely reducible members") {
  auto nine = pappus_configuration();
  // incidence sanity
  CHECK(collinear(nine[0], nine[4], nine[6]));
  CHECK(collinear(nine[0], nine[5], nine[7]));
  CHECK(collinear(nine[1], nine[5], nine[8]));
  CHECK(collinear(nine[6], nine[7], nine[8]));
  std::array<ProjPoint, 8> eight;
  for (int i = 0; i < 8; i++) eight[i] = nine[i];
  Pencil p = pencil_through(eight);
  CHECK(p.ninth == nine[8]);
  auto reds = reducible_census(p);
  int completely = 0;
  for (auto& r : reds) completely += r.completely_reducible;
  CHECK(completely == 3);
}

TEST_CASE("generic pencil census and invariance") {
  Configuration c = realize_extremal_h8({3, -1}, true);
  PencilAnalysis a = analyze_pencil(c.pts);
  CHECK(a.generic);
  CHECK((a.n_real == 8 || a.n_real == 10 || a.n_real == 12));
  CHECK(a.n_real - 2 * a.n_isolated == 8);
  CHECK(a.n_isolated == a.n_empty_loop);
  CHECK(a.n_distinguished == 8);
  CombinatorialPencil cp = combinatorial_pencil(a);
  CHECK(!cp.canonical.empty());
  // relabeling invariance
  D8 g = D8::rotation(3).compose(D8::axis(1, 5));
  std::array<ProjPoint, 8> relabeled;
  for (int i = 1; i <= 8; i++) relabeled[g.apply(i) - 1] = c.at(i);
  CombinatorialPencil cp2 = combinatorial_pencil(analyze_pencil(relabeled));
  CHECK(cp2.canonical == cp.canonical);
}

TEST_CASE("degeneration prediction follows the published rules") {
  // a list with h1 = 5+ and h5 = 8-: reducible limit with conic 23467
  bool found = false;
  for (int i = 0; i < kPublishedListCount && !found; i++) {
    const PublishedList& pl = kPublishedLists[i];
    std::array<SevenType, 8> ty;
    for (int k = 0; k < 7; k++) ty[k] = {pl.types[k].label, pl.types[k].sign};
    ty[7] = {pl.h8.label, pl.h8.sign};
    PositionTable base_t = table_from_types(ty);
    PositionTable t;
    bool hit = false;
    for (const D8& g : D8::all()) {
      PositionTable cand = apply_d8(g, base_t);
      ListCode cc = make_list_code(cand);
      if (cc.types[0] == SevenType{5, 1} && cc.types[4] == SevenType{8, -1}) {
        t = cand;
        hit = true;
        break;
      }
    }
    if (!hit) continue;
    ListCode code = make_list_code(t);
    if (code.dist[7] == 0) continue;
    DegenerationPrediction d;
    try {
      d = predict_degeneration(code);
    } catch (const Error&) {
      continue;  // nodal orbit image
    }
    CHECK(!d.nodal_limit);
    int want = 0;
    for (int x : {2, 3, 4, 6, 7}) want |= 1 << (x - 1);
    CHECK(d.conic_mask == want);
    CHECK(d.line_point == 5);
    REQUIRE(d.pair_names.size() == 1);
    CHECK(d.pair_names[0] == "(5,8-),(5+,1)");
    found = true;
  }
  CHECK(found);
  // h8 = h1 = 1+/8+ nodal-limit shape: L64 has h8=1+, h1=2+, d=6 -> reducible+flag
  {
    const PublishedList& pl = kPublishedLists[63];
    std::array<SevenType, 8> ty;
    for (int k = 0; k < 7; k++) ty[k] = {pl.types[k].label, pl.types[k].sign};
    ty[7] = {pl.h8.label, pl.h8.sign};
    ListCode code = make_list_code(table_from_types(ty));
    CHECK_THROWS_AS(predict_degeneration(code), Error);  // L64 is a nodal orbit
  }
}
