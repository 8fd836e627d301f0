#include "octet/list_code.hpp"

#include <algorithm>

namespace octet {

static std::array<std::array<int, 5>, 56> make_subsets8() {
  std::vector<std::array<int, 5>> v;
  for (int mask = 0; mask < 256; mask++) {
    if (__builtin_popcount(mask) != 5) continue;
    std::array<int, 5> s{};
    int k = 0;
    for (int b = 0; b < 8; b++)
      if (mask & (1 << b)) s[k++] = b + 1;
    v.push_back(s);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    for (int i = 4; i >= 0; i--)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  std::array<std::array<int, 5>, 56> out{};
  for (int i = 0; i < 56; i++) out[i] = v[i];
  return out;
}

const TableIndex8& TableIndex8::get() {
  static const TableIndex8 t = [] {
    TableIndex8 t;
    t.subset = make_subsets8();
    t.index_of_mask.fill(-1);
    for (int i = 0; i < 56; i++) {
      int mask = 0;
      for (int x : t.subset[i]) mask |= 1 << (x - 1);
      t.index_of_mask[mask] = i;
      int k = 0;
      for (int x = 1; x <= 8; x++)
        if (!(mask & (1 << (x - 1)))) t.off[i][k++] = x;
    }
    return t;
  }();
  return t;
}

int TableIndex8::slot_of(int s, int point) const {
  for (int k = 0; k < 3; k++)
    if (off[s][k] == point) return k;
  throw Error("Internal", "point not off conic (8)");
}

std::array<uint64_t, 3> PositionTable::key() const {
  std::array<uint64_t, 3> k{};
  for (int i = 0; i < 168; i++)
    if (inside[i]) k[i / 64] |= 1ull << (i % 64);
  return k;
}

// ----- D8 -----

D8 D8::identity() {
  D8 g;
  for (int i = 1; i <= 8; i++) g.perm[i - 1] = i;
  return g;
}

D8 D8::rotation(int k) {
  D8 g;
  k = ((k % 8) + 8) % 8;
  for (int i = 1; i <= 8; i++) g.perm[i - 1] = (i - 1 + k) % 8 + 1;
  return g;
}

static D8 base_reflection() {
  // axis through 1 and 5: 2<->8, 3<->7, 4<->6
  D8 g;
  g.reflection = true;
  g.perm = {1, 8, 7, 6, 5, 4, 3, 2};
  return g;
}

D8 D8::compose(const D8& o) const {
  D8 g;
  for (int i = 1; i <= 8; i++) g.perm[i - 1] = apply(o.apply(i));
  g.reflection = reflection != o.reflection;
  return g;
}

D8 D8::inverse() const {
  D8 g;
  for (int i = 1; i <= 8; i++) g.perm[apply(i) - 1] = i;
  g.reflection = reflection;
  return g;
}

D8 D8::axis(int a, int b) {
  if ((b - a + 8) % 8 != 4) throw Error("BadAxis", "labels not opposite");
  // conjugate the 1-5 reflection by the rotation sending 1 to a
  D8 r = rotation(a - 1);
  return r.compose(base_reflection()).compose(r.inverse());
}

const std::vector<D8>& D8::all() {
  static const std::vector<D8> v = [] {
    std::vector<D8> v;
    for (int k = 0; k < 8; k++) v.push_back(rotation(k));
    for (int k = 0; k < 8; k++) v.push_back(rotation(k).compose(base_reflection()));
    return v;
  }();
  return v;
}

std::string D8::name() const {
  if (!reflection) {
    int k = perm[0] - 1;
    return k == 0 ? "id" : "+" + std::to_string(k);
  }
  for (int a = 1; a <= 4; a++)
    if (apply(a) == a) return std::to_string(a) + std::to_string(a + 4);
  // edge reflection: write as (+1)(ab) with ab the axis of rot(-1)*this
  D8 s = rotation(-1).compose(*this);
  for (int a = 1; a <= 4; a++)
    if (s.apply(a) == a) return "(+1)(" + std::to_string(a) + std::to_string(a + 4) + ")";
  throw Error("Internal", "unnamed reflection");
}

// ----- restriction and types -----

int transport_label(int i, int position) { return (i + position - 1) % 8 + 1; }

Bits42 restriction(const PositionTable& t, int i) {
  const auto& i7 = TableIndex7::get();
  const auto& i8 = TableIndex8::get();
  Bits42 out;
  for (int s = 0; s < 21; s++) {
    int mask8 = 0;
    for (int x : i7.subset[s]) mask8 |= 1 << (transport_label(i, x) - 1);
    int s8 = i8.index_of_mask[mask8];
    for (int k = 0; k < 2; k++) {
      int q = transport_label(i, i7.off[s][k]);
      out[i7.entry(s, k)] = t.inside[i8.entry_of(s8, q)];
    }
  }
  return out;
}

SevenType seven_type_of(const PositionTable& t, int i) {
  int id = classify_seven_table(restriction(t, i));
  SevenType ref = type_of_id(id);
  return {transport_label(i, ref.label), ref.sign};
}

static int distance_between(const PositionTable& t, int a) {
  const auto& i8 = TableIndex8::get();
  int b = a % 8 + 1;
  int count = 0, a_side = 0;  // a_side: +1 inside, -1 outside (on separators)
  for (int drop = 1; drop <= 8; drop++) {
    if (drop == a || drop == b) continue;
    int mask = 0;
    for (int x = 1; x <= 8; x++)
      if (x != a && x != b && x != drop) mask |= 1 << (x - 1);
    int s = i8.index_of_mask[mask];
    bool ain = t.inside[i8.entry_of(s, a)];
    bool bin = t.inside[i8.entry_of(s, b)];
    if (ain == bin) continue;
    count++;
    int side = ain ? 1 : -1;
    if (a_side == 0)
      a_side = side;
    else if (a_side != side)
      throw Error("Internal", "inconsistent separator orientation");
  }
  return count * (a_side == 0 ? 1 : a_side);
}

std::array<int, 8> distance_octuple(const PositionTable& t) {
  std::array<int, 8> d{};
  for (int a = 1; a <= 8; a++) d[a - 1] = distance_between(t, a);
  return d;
}

ListCode make_list_code(const PositionTable& t) {
  ListCode c;
  c.table = t;
  for (int i = 1; i <= 8; i++) c.types[i - 1] = seven_type_of(t, i);
  c.dist = distance_octuple(t);
  c.sigma = 0;
  for (int x : c.dist) c.sigma += x;
  return c;
}

std::string list_text(const ListCode& c) {
  std::string s;
  for (int i = 0; i < 8; i++) {
    if (i) s += ",";
    s += "h" + std::to_string(i + 1) + "=" + c.types[i].name();
  }
  s += "; d=(";
  for (int i = 0; i < 8; i++) {
    if (i) s += ",";
    s += std::to_string(c.dist[i]);
  }
  s += "); sigma=" + std::to_string(c.sigma);
  return s;
}

PositionTable apply_d8(const D8& g, const PositionTable& t) {
  const auto& i8 = TableIndex8::get();
  D8 inv = g.inverse();
  PositionTable out;
  for (int s = 0; s < 56; s++) {
    int pmask = 0;
    for (int x : i8.subset[s]) pmask |= 1 << (inv.apply(x) - 1);
    int ps = i8.index_of_mask[pmask];
    for (int k = 0; k < 3; k++) {
      int q = inv.apply(i8.off[s][k]);
      out.inside[i8.entry(s, k)] = t.inside[i8.entry_of(ps, q)];
    }
  }
  return out;
}

std::pair<PositionTable, D8> canonical_form(const PositionTable& t) {
  const auto& gs = D8::all();
  PositionTable best = apply_d8(gs[0], t);
  D8 bg = gs[0];
  for (size_t i = 1; i < gs.size(); i++) {
    PositionTable cand = apply_d8(gs[i], t);
    if (cand < best) {
      best = cand;
      bg = gs[i];
    }
  }
  return {best, bg};
}

std::vector<D8> stabilizer(const PositionTable& t) {
  std::vector<D8> out;
  for (const D8& g : D8::all())
    if (apply_d8(g, t) == t) out.push_back(g);
  return out;
}

PositionTable table_from_types(const std::array<SevenType, 8>& types) {
  const auto& i7 = TableIndex7::get();
  const auto& i8 = TableIndex8::get();
  PositionTable out;
  std::bitset<168> written;
  for (int i = 1; i <= 8; i++) {
    // reference type: position of the labelled point
    int pos = -1;
    for (int p = 1; p <= 7; p++)
      if (transport_label(i, p) == types[i - 1].label) pos = p;
    if (pos < 0) throw Error("BadType", "type label equals sub-list index");
    const Bits42& ref = reference_table(type_id(pos, types[i - 1].sign));
    for (int s = 0; s < 21; s++) {
      int mask8 = 0;
      for (int x : i7.subset[s]) mask8 |= 1 << (transport_label(i, x) - 1);
      int s8 = i8.index_of_mask[mask8];
      for (int k = 0; k < 2; k++) {
        int q = transport_label(i, i7.off[s][k]);
        int e = i8.entry_of(s8, q);
        bool v = ref[i7.entry(s, k)];
        if (written[e] && out.inside[e] != v)
          throw Error("InconsistentSevenTable", "sub-list tables disagree on a shared entry");
        out.inside[e] = v;
        written[e] = true;
      }
    }
  }
  if (written.count() != 168) throw Error("Internal", "table reconstruction incomplete");
  return out;
}

PositionTable flip_six(const PositionTable& t, int mask) {
  if (__builtin_popcount(mask) != 6) throw Error("Internal", "flip_six needs a 6-set");
  const auto& i8 = TableIndex8::get();
  PositionTable out = t;
  for (int q = 1; q <= 8; q++) {
    if (!(mask & (1 << (q - 1)))) continue;
    int smask = mask & ~(1 << (q - 1));
    int s = i8.index_of_mask[smask];
    int e = i8.entry_of(s, q);
    out.inside[e] = !out.inside[e];
  }
  return out;
}

std::array<int, 8> octuple_apply(const D8& g, const std::array<int, 8>& d) {
  std::array<int, 8> out{};
  D8 inv = g.inverse();
  for (int i = 1; i <= 8; i++) {
    int j = inv.apply(i);
    int jn = inv.apply(i % 8 + 1);
    if (!g.reflection) {
      // jn == j+1 cyclically
      out[i - 1] = d[j - 1];
    } else {
      // jn == j-1 cyclically; reversed pair flips the sign
      out[i - 1] = -d[jn - 1];
    }
  }
  return out;
}

bool octuple_equivalent(const std::array<int, 8>& a, const std::array<int, 8>& b) {
  for (const D8& g : D8::all())
    if (octuple_apply(g, a) == b) return true;
  return false;
}

}  // namespace octet
