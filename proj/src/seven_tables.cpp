#include <algorithm>
#include <cstring>

#include "octet/list_code.hpp"
#include "octet/paper_data.hpp"

namespace octet {

static std::array<std::array<int, 5>, 21> make_subsets7() {
  std::vector<std::array<int, 5>> v;
  for (int mask = 0; mask < 128; mask++) {
    if (__builtin_popcount(mask) != 5) continue;
    std::array<int, 5> s{};
    int k = 0;
    for (int b = 0; b < 7; b++)
      if (mask & (1 << b)) s[k++] = b + 1;
    v.push_back(s);
  }
  // colexicographic: compare from the largest element down
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    for (int i = 4; i >= 0; i--)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  std::array<std::array<int, 5>, 21> out{};
  for (int i = 0; i < 21; i++) out[i] = v[i];
  return out;
}

const TableIndex7& TableIndex7::get() {
  static const TableIndex7 t = [] {
    TableIndex7 t;
    t.subset = make_subsets7();
    t.index_of_mask.fill(-1);
    for (int i = 0; i < 21; i++) {
      int mask = 0;
      for (int x : t.subset[i]) mask |= 1 << (x - 1);
      t.index_of_mask[mask] = i;
      int k = 0;
      for (int x = 1; x <= 7; x++)
        if (!(mask & (1 << (x - 1)))) t.off[i][k++] = x;
    }
    return t;
  }();
  return t;
}

int TableIndex7::slot_of(int s, int point) const {
  for (int k = 0; k < 2; k++)
    if (off[s][k] == point) return k;
  throw Error("Internal", "point not off conic (7)");
}

int type_id(int n, int sign) { return (n - 1) * 2 + (sign > 0 ? 0 : 1); }

SevenType type_of_id(int id) { return {id / 2 + 1, id % 2 == 0 ? 1 : -1}; }

SevenType parse_type(const std::string& s) {
  if (s.size() < 2) throw Error("BadType", s);
  int n = std::stoi(s.substr(0, s.size() - 1));
  char c = s.back();
  if (c != '+' && c != '-') throw Error("BadType", s);
  return {n, c == '+' ? 1 : -1};
}

static std::array<Bits42, 14> build_reference_tables() {
  const auto& ix = TableIndex7::get();
  std::array<Bits42, 14> tabs{};
  std::array<int, 14> seen{};
  for (int r = 0; r < kSevenTableRowCount; r++) {
    const SevenTableRow& row = kSevenTableRows[r];
    SevenType t = parse_type(row.type);
    int id = type_id(t.label, t.sign);
    int mask = 0;
    for (const char* p = row.conic; *p; p++) mask |= 1 << (*p - '1');
    int s = ix.index_of_mask[mask];
    if (s < 0) throw Error("Internal", "bad reference conic");
    for (int k = 0; k < 2; k++) {
      int pt = ix.off[s][k];
      bool in = std::strchr(row.inside, '0' + pt) != nullptr;
      tabs[id][ix.entry(s, k)] = in;
    }
    seen[id]++;
  }
  for (int id = 0; id < 14; id++) {
    if (seen[id] != 21) throw Error("Internal", "incomplete reference table");
    for (int j = 0; j < id; j++)
      if (tabs[id] == tabs[j]) throw Error("Internal", "duplicate reference tables");
  }
  // defining pairs must agree with the tables
  for (const auto& bp : kSevenBoldPairs) {
    SevenType t = parse_type(bp.type);
    int id = type_id(t.label, t.sign);
    int mask = 0;
    for (const char* p = bp.conic; *p; p++) mask |= 1 << (*p - '1');
    int s = ix.index_of_mask[mask];
    if (!tabs[id][ix.entry_of(s, bp.in_point)] || tabs[id][ix.entry_of(s, bp.out_point)])
      throw Error("Internal", "bold pair mismatch in reference data");
  }
  return tabs;
}

const Bits42& reference_table(int id) {
  static const std::array<Bits42, 14> tabs = build_reference_tables();
  return tabs[id];
}

int classify_seven_table(const Bits42& t) {
  int found = -1;
  for (int id = 0; id < 14; id++) {
    if (t == reference_table(id)) {
      if (found >= 0) throw Error("Internal", "ambiguous seven-point table");
      found = id;
    }
  }
  if (found < 0) throw Error("InconsistentSevenTable", "no reference table matches");
  return found;
}

}  // namespace octet
