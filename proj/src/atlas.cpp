#include "octet/atlas.hpp"

#include <algorithm>
#include <set>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "octet/paper_data.hpp"

namespace octet {

int Atlas::node_of(const PositionTable& t) const {
  auto it = index.find(t.key());
  return it == index.end() ? -1 : it->second;
}

int Atlas::orbit_of(const PositionTable& t) const {
  auto it = orbit_index.find(canonical_form(t).first.key());
  if (it == orbit_index.end()) throw Error("UnknownList", "not an atlas list");
  return it->second;
}

int Atlas::orbit_by_label(int label) const {
  for (size_t i = 0; i < orbits.size(); i++)
    for (int l : orbits[i].published_labels)
      if (l == label) return (int)i;
  return -1;
}

std::vector<int> applicable_change_masks(const PositionTable& t) {
  std::vector<int> out;
  for (int mask = 0; mask < 256; mask++) {
    if (__builtin_popcount(mask) != 6) continue;
    PositionTable m = flip_six(t, mask);
    int f = -1, g = -1;
    for (int x = 1; x <= 8; x++)
      if (!(mask & (1 << (x - 1)))) (f < 0 ? f : g) = x;
    try {
      (void)classify_seven_table(restriction(m, f));
      (void)classify_seven_table(restriction(m, g));
    } catch (const Error&) {
      continue;
    }
    out.push_back(mask);
  }
  return out;
}

namespace {

// Fresh rational points on a conic: second intersections of lines through the
// first defining point with rational mixes of the other defining points.
std::vector<std::pair<Rat, Rat>> conic_sample_points(const Conic& k,
                                                     const std::array<ProjPoint, 5>& def) {
  std::vector<std::pair<Rat, Rat>> out;
  static const Rat lams[] = {Rat(1, 2),  Rat(1, 4), Rat(3, 4), Rat(3, 2), Rat(-1, 2),
                             Rat(1, 8),  Rat(7, 8), Rat(2),    Rat(-1),   Rat(1, 16),
                             Rat(15, 16), Rat(3)};
  const auto& q = k.c;
  for (int base = 0; base < 5; base++) {
    Rat x0 = def[base].ax(), y0 = def[base].ay();
    for (int o1 = 0; o1 < 5; o1++) {
      if (o1 == base) continue;
      int o2 = (o1 + 1) % 5 == base ? (o1 + 2) % 5 : (o1 + 1) % 5;
      for (const Rat& lam : lams) {
        Rat mx = def[o1].ax() + lam * (def[o2].ax() - def[o1].ax());
        Rat my = def[o1].ay() + lam * (def[o2].ay() - def[o1].ay());
        Rat dx = mx - x0, dy = my - y0;
        Rat A = Rat(q[0]) * dx * dx + Rat(q[1]) * dx * dy + Rat(q[2]) * dy * dy;
        if (sgn(A) == 0) continue;
        Rat B = 2 * Rat(q[0]) * x0 * dx + Rat(q[1]) * (x0 * dy + y0 * dx) +
                2 * Rat(q[2]) * y0 * dy + Rat(q[3]) * dx + Rat(q[4]) * dy;
        Rat t = -B / A;
        if (sgn(t) == 0) continue;
        out.push_back({x0 + t * dx, y0 + t * dy});
      }
      break;  // one partner direction per base point is enough variety
    }
  }
  return out;
}

// Floating-point estimate: does the segment from p to target hit the target
// conic before any other wall? Errs on the side of "maybe".
bool float_first_wall_is_target(const Configuration& c, const ConicCache& cache, int p,
                                double tx, double ty, int target_subset) {
  const auto& i8 = TableIndex8::get();
  double px = c.at(p).ax().get_d(), py = c.at(p).ay().get_d();
  double dx = tx - px, dy = ty - py;
  double best = 2.0, second = 2.0;
  int best_wall = -1;
  auto consider = [&](int wall, double root) {
    if (root < 1e-12 || root >= 1) return;
    if (root < best) {
      second = best;
      best = root;
      best_wall = wall;
    } else if (root < second) {
      second = root;
    }
  };
  for (int s = 0; s < 56; s++) {
    bool off = false;
    for (int k = 0; k < 3; k++) off |= i8.off[s][k] == p;
    if (!off) continue;
    const auto& q = cache.of_subset(s).c;
    double A = q[0].get_d(), B = q[1].get_d(), C = q[2].get_d(), D = q[3].get_d(),
           E = q[4].get_d(), F = q[5].get_d();
    // conic along the segment: a t^2 + b t + c
    double a = A * dx * dx + B * dx * dy + C * dy * dy;
    double b = 2 * A * px * dx + B * (px * dy + py * dx) + 2 * C * py * dy + D * dx + E * dy;
    double cc = A * px * px + B * px * py + C * py * py + D * px + E * py + F;
    double disc = b * b - 4 * a * cc;
    if (disc < 0) continue;
    double sq = std::sqrt(disc);
    if (std::abs(a) < 1e-300) {
      if (std::abs(b) > 0) consider(s, -cc / b);
      continue;
    }
    consider(s, (-b - sq) / (2 * a));
    consider(s, (-b + sq) / (2 * a));
  }
  for (int i = 1; i <= 8; i++) {
    if (i == p) continue;
    for (int j = i + 1; j <= 8; j++) {
      if (j == p) continue;
      double xi = c.at(i).ax().get_d(), yi = c.at(i).ay().get_d();
      double xj = c.at(j).ax().get_d(), yj = c.at(j).ay().get_d();
      double a = dx * (yi - yj) - dy * (xi - xj);
      double b = px * (yi - yj) - py * (xi - xj) + (xi * yj - xj * yi);
      if (std::abs(a) > 1e-300) consider(1000, -b / a);
    }
  }
  if (best_wall != target_subset) return false;
  if (second - best < 1e-9 * (1 + std::abs(best))) return true;  // ambiguous: let exact decide
  return true;
}

}  // namespace

Configuration certify_crossing(const Configuration& c, const PositionTable& table,
                               const ConicCache& cache, int six_mask) {
  const auto& i8 = TableIndex8::get();
  int budget = 40;  // exact sweep attempts
  for (int pass = 0; pass < 2; pass++) {
    // pass 0: float-filtered candidates; pass 1: everything, exact only
    for (int p = 1; p <= 8; p++) {
      if (!(six_mask & (1 << (p - 1)))) continue;
      int smask = six_mask & ~(1 << (p - 1));
      int s = i8.index_of_mask[smask];
      const Conic& conic = cache.of_subset(s);
      std::array<ProjPoint, 5> def;
      for (int k = 0; k < 5; k++) def[k] = c.at(i8.subset[s][k]);
      Rat px = c.at(p).ax(), py = c.at(p).ay();
      for (auto& [rx, ry] : conic_sample_points(conic, def)) {
        Rat tx = 2 * rx - px, ty = 2 * ry - py;
        if (pass == 0 &&
            !float_first_wall_is_target(c, cache, p, tx.get_d(), ty.get_d(), s))
          continue;
        if (budget-- <= 0) throw Error("CertificationFailed", "attempt budget exhausted");
        try {
          return move_point_across(c, table, cache, p, tx, ty, smask);
        } catch (const Error&) {
          continue;
        }
      }
    }
  }
  throw Error("CertificationFailed", "no straight move realizes the crossing");
}

std::vector<Configuration> default_seeds() {
  std::vector<Configuration> seeds;
  for (int n = 1; n <= 7; n++)
    for (int sign : {1, -1})
      for (bool mx : {true, false}) seeds.push_back(realize_extremal_h8({n, sign}, mx));
  return seeds;
}

namespace {

struct Candidate {
  std::array<uint64_t, 3> key;
  PositionTable table;
  Configuration realization;
  std::array<uint64_t, 3> parent_key;
  int mask;
};

}  // namespace

Atlas build_atlas(const std::vector<Configuration>& seeds, const BuildOptions& opt) {
  Atlas a;
  auto add_node = [&](const PositionTable& t, const Configuration& r) {
    int id = (int)a.nodes.size();
    AtlasNode n;
    n.table = t;
    n.code = make_list_code(t);
    n.realization = r;
    a.nodes.push_back(std::move(n));
    a.index[t.key()] = id;
    return id;
  };

  std::vector<int> frontier;
  {
    std::vector<std::pair<PositionTable, Configuration>> admit;
    for (const Configuration& s : seeds) {
      PositionTable t = compute_position_table(s);
      for (const D8& g : D8::all()) {
        PositionTable img = apply_d8(g, t);
        Configuration moved;
        for (int i = 1; i <= 8; i++) moved.pts[g.apply(i) - 1] = s.at(i);
        moved.provenance = s.provenance;
        if (!(g == D8::identity())) moved.provenance.push_back("relabel " + g.name());
        admit.push_back({img, std::move(moved)});
      }
    }
    std::sort(admit.begin(), admit.end(),
              [](const auto& x, const auto& y) { return x.first.key() < y.first.key(); });
    for (auto& [tbl, cfg] : admit) {
      if (a.node_of(tbl) >= 0) continue;
      frontier.push_back(add_node(tbl, cfg));
    }
  }
  if (frontier.empty()) throw Error("SeedInvalid", "no seeds");
  long long certified = 0;

  const bool progress = std::getenv("OCTET_PROGRESS") != nullptr;
  int layer = 0;
  while (!frontier.empty()) {
    if (progress)
      std::fprintf(stderr, "[atlas] layer %d frontier %zu nodes %zu\n", layer++,
                   frontier.size(), a.nodes.size());
    // combinatorial pass: gather the new children of this layer, each with
    // the (deterministically ordered) list of parents that could certify it
    struct Child {
      std::array<uint64_t, 3> key;
      PositionTable table;
      std::vector<std::pair<int, int>> parents;  // (node id, mask)
    };
    std::map<std::array<uint64_t, 3>, Child> children;
    for (int id : frontier) {
      const AtlasNode& node = a.nodes[id];
      for (int mask : applicable_change_masks(node.table)) {
        PositionTable m = flip_six(node.table, mask);
        if (a.node_of(m) >= 0) continue;
        Child& ch = children[m.key()];
        ch.key = m.key();
        ch.table = m;
        ch.parents.push_back({id, mask});
      }
    }
    // group children by canonical class: one certified member admits the
    // whole orbit, so only one representative per class needs geometry
    std::map<std::array<uint64_t, 3>, std::vector<Child*>> classes;
    for (auto& [k, ch] : children) {
      std::sort(ch.parents.begin(), ch.parents.end());
      classes[canonical_form(ch.table).first.key()].push_back(&ch);
    }
    std::vector<std::vector<Child*>> order;
    for (auto& [k, members] : classes) {
      std::sort(members.begin(), members.end(),
                [](const Child* x, const Child* y) { return x->key < y->key; });
      order.push_back(members);
    }
    // geometric pass: first (member, parent) pair that certifies wins
    std::vector<std::optional<Configuration>> realized(order.size());
    std::vector<const Child*> realized_child(order.size(), nullptr);
    auto work = [&](int ci) {
      for (Child* ch : order[ci]) {
        for (auto& [id, mask] : ch->parents) {
          const AtlasNode& node = a.nodes[id];
          ConicCache cache(node.realization);
          try {
            realized[ci] = certify_crossing(node.realization, node.table, cache, mask);
            realized_child[ci] = ch;
            return;
          } catch (const Error&) {
          }
        }
      }
    };
#ifdef _OPENMP
    if (opt.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
      for (int ci = 0; ci < (int)order.size(); ci++) work(ci);
    } else {
      for (int ci = 0; ci < (int)order.size(); ci++) work(ci);
    }
#else
    for (int ci = 0; ci < (int)order.size(); ci++) work(ci);
#endif
    // admit certified children together with their relabeled images (a
    // permuted realization realizes the permuted list exactly)
    std::vector<std::pair<PositionTable, Configuration>> admit;
    for (int ci = 0; ci < (int)order.size(); ci++) {
      if (!realized[ci]) continue;  // nobody certified it this layer
      certified++;
      for (const D8& g : D8::all()) {
        PositionTable img = apply_d8(g, realized_child[ci]->table);
        Configuration moved;
        for (int i = 1; i <= 8; i++) moved.pts[g.apply(i) - 1] = realized[ci]->at(i);
        moved.provenance = realized[ci]->provenance;
        if (!(g == D8::identity())) moved.provenance.push_back("relabel " + g.name());
        admit.push_back({img, std::move(moved)});
      }
    }
    std::sort(admit.begin(), admit.end(),
              [](const auto& x, const auto& y) { return x.first.key() < y.first.key(); });
    std::vector<int> next;
    for (auto& [tbl, cfg] : admit) {
      if (a.node_of(tbl) >= 0) continue;
      next.push_back(add_node(tbl, cfg));
    }
    frontier = std::move(next);
  }

  // completion sweeps. Relabeling a realized configuration realizes the
  // relabeled list (the construction is closed under elementary changes AND
  // the D8 action, as in the published procedure); after that, any admissible
  // neighbour still missing gets more certification attempts.
  for (bool grew = true; grew;) {
    grew = false;
    for (int id = 0; id < (int)a.nodes.size(); id++) {
      for (const D8& g : D8::all()) {
        PositionTable img = apply_d8(g, a.nodes[id].table);
        if (a.node_of(img) >= 0) continue;
        Configuration moved;
        for (int i = 1; i <= 8; i++) moved.pts[g.apply(i) - 1] = a.nodes[id].realization.at(i);
        moved.provenance = a.nodes[id].realization.provenance;
        moved.provenance.push_back("relabel " + g.name());
        if (compute_position_table(moved) != img)
          throw Error("Internal", "relabeled realization has wrong table");
        add_node(img, moved);
        grew = true;
      }
    }
    for (int id = 0; id < (int)a.nodes.size(); id++) {
      const AtlasNode node = a.nodes[id];  // copy: a.nodes may reallocate
      ConicCache cache(node.realization);
      for (int mask : applicable_change_masks(node.table)) {
        PositionTable m = flip_six(node.table, mask);
        if (a.node_of(m) >= 0) continue;
        try {
          Configuration moved = certify_crossing(node.realization, node.table, cache, mask);
          add_node(m, moved);
          certified++;
          grew = true;
        } catch (const Error&) {
        }
      }
    }
  }

  // edge lists over the closed node set
  for (auto& n : a.nodes) {
    for (int mask : applicable_change_masks(n.table)) {
      PositionTable m = flip_six(n.table, mask);
      int j = a.node_of(m);
      if (j >= 0) n.edges.push_back({mask, j});
    }
  }
  a.edge_count = 0;
  for (int i = 0; i < (int)a.nodes.size(); i++) {
    for (auto& [mask, j] : a.nodes[i].edges) {
      bool back = false;
      for (auto& [m2, k] : a.nodes[j].edges) back |= m2 == mask && k == i;
      if (!back) throw Error("Internal", "atlas adjacency not symmetric");
      if (i < j) a.edge_count++;
    }
  }

  // orbits
  for (int i = 0; i < (int)a.nodes.size(); i++) {
    auto [canon, g] = canonical_form(a.nodes[i].table);
    (void)g;
    auto key = canon.key();
    auto it = a.orbit_index.find(key);
    int oid;
    if (it == a.orbit_index.end()) {
      oid = (int)a.orbits.size();
      AtlasOrbit o;
      o.canonical = canon;
      a.orbits.push_back(o);
      a.orbit_index[key] = oid;
    } else {
      oid = it->second;
    }
    a.nodes[i].orbit = oid;
    a.orbits[oid].members.push_back(i);
  }
  // published labels per orbit
  for (int pi = 0; pi < kPublishedListCount; pi++) {
    const PublishedList& pl = kPublishedLists[pi];
    if (!pl.principal) continue;
    std::array<SevenType, 8> ty;
    for (int i = 0; i < 7; i++) ty[i] = {pl.types[i].label, pl.types[i].sign};
    ty[7] = {pl.h8.label, pl.h8.sign};
    PositionTable t = table_from_types(ty);
    auto it = a.orbit_index.find(canonical_form(t).first.key());
    if (it != a.orbit_index.end()) a.orbits[it->second].published_labels.push_back(pl.n);
  }
  for (auto& o : a.orbits) {
    std::sort(o.published_labels.begin(), o.published_labels.end());
    o.principal_label = o.published_labels.empty() ? 0 : o.published_labels.front();
  }

  // octuple index (not injective: a few octuple collisions exist)
  for (int i = 0; i < (int)a.nodes.size(); i++)
    a.octuple_index[a.nodes[i].code.dist].push_back(i);

  a.certified_moves = certified;

  if (opt.certify_all_edges) {
    a.certified_edges = 0;
    std::vector<std::pair<int, int>> todo;  // (node, mask) for i < j
    for (int i = 0; i < (int)a.nodes.size(); i++)
      for (auto& [mask, j] : a.nodes[i].edges)
        if (i < j) todo.push_back({i, mask});
    std::vector<char> ok(todo.size(), 0);
    auto work = [&](int k) {
      auto [i, mask] = todo[k];
      const AtlasNode& n = a.nodes[i];
      ConicCache cache(n.realization);
      try {
        (void)certify_crossing(n.realization, n.table, cache, mask);
        ok[k] = 1;
      } catch (const Error&) {
        ok[k] = 0;
      }
    };
#ifdef _OPENMP
    if (opt.jobs > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
      for (int k = 0; k < (int)todo.size(); k++) work(k);
    } else {
      for (int k = 0; k < (int)todo.size(); k++) work(k);
    }
#else
    for (int k = 0; k < (int)todo.size(); k++) work(k);
#endif
    for (char v : ok) a.certified_edges += v;
    if (a.certified_edges != a.edge_count)
      throw Error("CertificationFailed",
                  std::to_string(a.edge_count - a.certified_edges) + " edges uncertified");
  }
  return a;
}

bool is_nodal_orbit(const Atlas& a, int orbit) {
  for (int l : a.orbits[orbit].published_labels)
    for (int n : kNodalOrbitLabels)
      if (l == n) return true;
  return false;
}

std::string nodal_families(const Atlas& a, int orbit) {
  int label = 0;
  for (int l : a.orbits[orbit].published_labels)
    for (int n : kNodalOrbitLabels)
      if (l == n) label = n;
  switch (label) {
    case 64:  // orbit of max(h1=8-)
      return "(1+,1)_nod (1-,1)_nod (1-,k)_nod k=2..8";
    case 32:  // max(h1=8+)
      return "(1+,1)_nod (1-,1)_nod (1-,8)_nod";
    case 48:  // max(h1=6-)
    case 56:  // max(h1=6+)
      return "(1+,1)_nod (1-,1)_nod";
    default:
      return "";
  }
}

ChangeCensus elementary_change_census(const Atlas& a) {
  ChangeCensus out;
  out.edge_instances = a.edge_count;
  struct Pattern {
    int f, g;  // sub-list indices, f < g
    SevenType fx, fy, gx, gy;
    bool operator<(const Pattern& o) const {
      auto t = [](const Pattern& p) {
        return std::make_tuple(p.f, p.g, p.fx.label, p.fx.sign, p.fy.label, p.fy.sign,
                               p.gx.label, p.gx.sign, p.gy.label, p.gy.sign);
      };
      return t(*this) < t(o);
    }
    bool operator==(const Pattern& o) const { return !(*this < o) && !(o < *this); }
  };
  std::set<Pattern> pats;
  for (const auto& n : a.nodes) {
    for (auto& [mask, j] : n.edges) {
      int f = -1, g = -1;
      for (int x = 1; x <= 8; x++)
        if (!(mask & (1 << (x - 1)))) (f < 0 ? f : g) = x;
      Pattern p;
      p.f = f;
      p.g = g;
      p.fx = n.code.types[f - 1];
      p.gx = n.code.types[g - 1];
      p.fy = a.nodes[j].code.types[f - 1];
      p.gy = a.nodes[j].code.types[g - 1];
      pats.insert(p);
    }
  }
  out.directed_patterns = (int)pats.size();
  // D8 orbits of directed patterns
  auto act = [](const D8& gg, const Pattern& p) {
    auto tmap = [&](SevenType t) {
      return SevenType{gg.apply(t.label), gg.reflection ? -t.sign : t.sign};
    };
    Pattern q;
    int nf = gg.apply(p.f), ng = gg.apply(p.g);
    if (nf < ng) {
      q.f = nf;
      q.g = ng;
      q.fx = tmap(p.fx);
      q.fy = tmap(p.fy);
      q.gx = tmap(p.gx);
      q.gy = tmap(p.gy);
    } else {
      q.f = ng;
      q.g = nf;
      q.fx = tmap(p.gx);
      q.fy = tmap(p.gy);
      q.gx = tmap(p.fx);
      q.gy = tmap(p.fy);
    }
    return q;
  };
  std::set<Pattern> seen;
  int orbits = 0;
  for (const Pattern& p : pats) {
    if (seen.count(p)) continue;
    orbits++;
    for (const D8& g : D8::all()) seen.insert(act(g, p));
  }
  out.pattern_orbits = orbits;
  return out;
}

std::vector<std::pair<int, int>> symmetric_adjacent_pairs(const Atlas& a, int axis_a,
                                                          int axis_b) {
  D8 sigma = D8::axis(axis_a, axis_b);
  int wall_mask = 255 & ~(1 << (axis_a - 1)) & ~(1 << (axis_b - 1));
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < (int)a.nodes.size(); i++) {
    const AtlasNode& n = a.nodes[i];
    for (auto& [mask, j] : n.edges) {
      if (mask != wall_mask || j <= i) continue;
      if (apply_d8(sigma, n.table) == a.nodes[j].table) out.push_back({i, j});
    }
  }
  return out;
}

const AtlasNode& decode_from_octuple(const Atlas& a, const std::array<int, 8>& d) {
  auto it = a.octuple_index.find(d);
  if (it == a.octuple_index.end()) throw Error("NotFound", "no list with this octuple");
  if (it->second.size() > 1)
    throw Error("AmbiguousOctuple",
                std::to_string(it->second.size()) + " lists share this octuple");
  return a.nodes[it->second.front()];
}

int extremal_node(const Atlas& a, int point, const SevenType& type, bool maximal) {
  const auto& i8 = TableIndex8::get();
  for (int i = 0; i < (int)a.nodes.size(); i++) {
    const AtlasNode& n = a.nodes[i];
    if (!(n.code.types[point - 1] == type)) continue;
    bool ok = true;
    for (int s = 0; s < 56 && ok; s++) {
      bool off = false;
      for (int k = 0; k < 3; k++) off |= i8.off[s][k] == point;
      if (!off) continue;
      bool inside = n.table.inside[i8.entry_of(s, point)];
      if (inside == maximal) ok = false;
    }
    if (ok) return i;
  }
  return -1;
}

}  // namespace octet
