#include <iostream>
#include <map>
#include <set>

#include "doctest.h"
#include "octet/list_code.hpp"
#include "octet/paper_data.hpp"
#include "octet/realization.hpp"

using namespace octet;

static std::array<SevenType, 8> published_types(int n) {
  const PublishedList& pl = kPublishedLists[n - 1];
  std::array<SevenType, 8> t;
  for (int i = 0; i < 7; i++) t[i] = {pl.types[i].label, pl.types[i].sign};
  t[7] = {pl.h8.label, pl.h8.sign};
  return t;
}

TEST_CASE("convex position detection") {
  Configuration c;
  static const Rat us[8] = {Rat(-5, 2), Rat(-1), Rat(-1, 2), Rat(-1, 5),
                            Rat(1, 5),  Rat(1, 2), Rat(1),   Rat(5, 2)};
  for (int i = 0; i < 8; i++) c.pts[i] = circle_point(us[i]);
  CHECK(check_convex_position(c.pts).ok);
  // swapped labels break cyclicity
  std::swap(c.pts[0], c.pts[1]);
  ConvexReport r = check_convex_position(c.pts);
  CHECK(!r.ok);
  CHECK(r.error_kind == "LabelingNotCyclic");
  std::swap(c.pts[0], c.pts[1]);
  // an interior point is flagged
  c.pts[3] = ProjPoint(Rat(1, 17), Rat(1, 13));
  r = check_convex_position(c.pts);
  CHECK(!r.ok);
  CHECK(r.error_kind == "NotConvex");
}

TEST_CASE("coconic configuration is rejected by the table") {
  Configuration c;
  static const Rat us[8] = {Rat(-5, 2), Rat(-1), Rat(-1, 2), Rat(-1, 5),
                            Rat(1, 5),  Rat(1, 2), Rat(1),   Rat(5, 2)};
  for (int i = 0; i < 8; i++) c.pts[i] = circle_point(us[i]);
  CHECK_THROWS_WITH_AS(compute_position_table(c), doctest::Contains("NonGenericOnConic"),
                       Error);
}

TEST_CASE("extremal realization: min(h8=1+) recomputes to L64") {
  Configuration c = realize_extremal_h8({1, +1}, false);
  ListCode code = make_list_code(compute_position_table(c));
  // L64 octuple: (0,0,0,0,0,0,0,6), sigma = 6
  CHECK(code.dist == std::array<int, 8>{0, 0, 0, 0, 0, 0, 0, 6});
  CHECK(code.sigma == 6);
  PositionTable l64 = table_from_types(published_types(64));
  CHECK(code.table == l64);
}

TEST_CASE("extremal realization: max(h8=1+) is the all-8+ list L1") {
  Configuration c = realize_extremal_h8({1, +1}, true);
  ListCode code = make_list_code(compute_position_table(c));
  PositionTable l1 = table_from_types(published_types(1));
  CHECK(code.table == l1);
}

TEST_CASE("all 28 extremal h8 realizations succeed and are distinct lists") {
  std::set<std::array<uint64_t, 3>> keys, orbits;
  for (int n = 1; n <= 7; n++)
    for (int sign : {1, -1})
      for (bool mx : {true, false}) {
        Configuration c = realize_extremal_h8({n, sign}, mx);
        PositionTable t = compute_position_table(c);
        keys.insert(t.key());
        orbits.insert(canonical_form(t).first.key());
      }
  // max(h8=2+) = min(h1-ish...) coincidences reduce the 28 to 26 lists
  CHECK(keys.size() >= 24);
  CHECK(orbits.size() == 12);
}

TEST_CASE("certified move across a conic") {
  // from L64 (point 8 inside everything), push 8 out of conic 34567
  Configuration c = realize_extremal_h8({1, +1}, false);
  PositionTable before = compute_position_table(c);
  int mask = 0;
  for (int x : {3, 4, 5, 6, 7}) mask |= 1 << (x - 1);
  // move 8 towards 1 (consecutive): first wall on that segment should be 34567
  Configuration c2 = move_until_crossing(c, 8, 1, mask);
  PositionTable after = compute_position_table(c2);
  CHECK(after == flip_six(before, mask | (1 << 7)));
  CHECK((before.inside ^ after.inside).count() == 6);
  // moving back across the same conic restores the list
  Configuration c3 = move_point_across(c2, 8, c.at(8).ax(), c.at(8).ay(), mask);
  CHECK(compute_position_table(c3) == before);
}

TEST_CASE("move rejects a wrong first wall") {
  Configuration c = realize_extremal_h8({1, +1}, false);
  // the conic 12345 is not the first wall when moving 8 towards 1
  int mask = 0;
  for (int x : {1, 2, 3, 4, 5}) mask |= 1 << (x - 1);
  CHECK_THROWS_AS(move_until_crossing(c, 8, 1, mask), Error);
}

TEST_CASE("variant-1 four-reducible wall") {
  Configuration c = four_reducible_config(1);
  std::vector<int> masks;
  CHECK(count_six_point_conics(c, &masks) == 4);
  auto maskof = [](std::initializer_list<int> pts) {
    int m = 0;
    for (int p : pts) m |= 1 << (p - 1);
    return m;
  };
  std::set<int> got(masks.begin(), masks.end());
  std::set<int> want = {maskof({1, 3, 4, 5, 7, 8}), maskof({1, 2, 3, 5, 6, 7}),
                        maskof({2, 3, 4, 6, 7, 8}), maskof({1, 2, 4, 5, 6, 8})};
  CHECK(got == want);
  // scaffold checks from the construction
  CHECK(coconic({c.at(1), c.at(3), c.at(4), c.at(5), c.at(7), c.at(8)}));
  CHECK(collinear(c.at(4), ProjPoint(Rat(0), Rat(0)), c.at(8)));
  CHECK(collinear(c.at(2), ProjPoint(Rat(0), Rat(0)), c.at(6)));
}

TEST_CASE("variant-2 four-reducible wall is found by the search") {
  Configuration c = four_reducible_config(2);
  std::vector<int> masks;
  CHECK(count_six_point_conics(c, &masks) == 4);
  CHECK(check_convex_position(c.pts).ok);
}

TEST_CASE("generic atlas realization has no six-point conics") {
  Configuration c = realize_extremal_h8({3, -1}, true);
  CHECK(count_six_point_conics(c) == 0);
}

TEST_CASE("eight coconic points are the deep stratum") {
  Configuration c;
  static const Rat us[8] = {Rat(-5, 2), Rat(-1), Rat(-1, 2), Rat(-1, 5),
                            Rat(1, 5),  Rat(1, 2), Rat(1),   Rat(5, 2)};
  for (int i = 0; i < 8; i++) c.pts[i] = circle_point(us[i]);
  CHECK(count_six_point_conics(c) == -1);
}

TEST_CASE("variant-1 perturbations realize the published lsix orbits") {
  auto configs = four_reducible_perturbations(1);
  CHECK(configs.size() >= 6);
  std::set<std::array<uint64_t, 3>> orbits;
  for (auto& c : configs) orbits.insert(canonical_form(compute_position_table(c)).first.key());
  std::set<std::array<uint64_t, 3>> want;
  for (int n : {88, 90, 92, 94})
    want.insert(canonical_form(table_from_types(published_types(n))).first.key());
  // the published orbits collapse pairwise (88~90, 92~94): two distinct
  CHECK(want.size() == 2);
  CHECK(orbits == want);
}

TEST_CASE("variant-2 perturbations realize the published targets") {
  auto configs = four_reducible_perturbations(2);
  std::set<std::array<uint64_t, 3>> orbits;
  for (auto& c : configs) orbits.insert(canonical_form(compute_position_table(c)).first.key());
  std::set<std::array<uint64_t, 3>> want;
  for (int n : {11, 12, 13, 14, 19, 20, 21, 22})
    want.insert(canonical_form(table_from_types(published_types(n))).first.key());
  CHECK(want.size() == 8);
  for (auto& w : want) CHECK(orbits.count(w));
}
