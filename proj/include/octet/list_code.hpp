#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <string>
#include <vector>

#include "octet/rational.hpp"

namespace octet {

// Entry layout of the 8-point position table: the 56 five-subsets of the
// labels 1..8 in colexicographic order, and for each subset its three
// off-conic points ascending. Bit set = Inside.
struct TableIndex8 {
  std::array<std::array<int, 5>, 56> subset;
  std::array<std::array<int, 3>, 56> off;
  std::array<int, 256> index_of_mask;  // 8-bit mask (bit = label-1) -> subset index
  static const TableIndex8& get();
  int entry(int s, int slot) const { return s * 3 + slot; }
  int slot_of(int s, int point) const;
  int entry_of(int s, int point) const { return entry(s, slot_of(s, point)); }
};

// Same for seven points (labels 1..7): 21 subsets x 2 off points = 42.
struct TableIndex7 {
  std::array<std::array<int, 5>, 21> subset;
  std::array<std::array<int, 2>, 21> off;
  std::array<int, 128> index_of_mask;
  static const TableIndex7& get();
  int entry(int s, int slot) const { return s * 2 + slot; }
  int slot_of(int s, int point) const;
  int entry_of(int s, int point) const { return entry(s, slot_of(s, point)); }
};

using Bits168 = std::bitset<168>;
using Bits42 = std::bitset<42>;

struct PositionTable {
  Bits168 inside;
  bool operator==(const PositionTable& o) const { return inside == o.inside; }
  bool operator!=(const PositionTable& o) const { return !(*this == o); }
  std::array<uint64_t, 3> key() const;
  bool operator<(const PositionTable& o) const { return key() < o.key(); }
};

// ----- seven-point classification -----

struct SevenType {
  int label = 0;  // point label (context: 1..7 for reference types, 1..8 in sub-lists)
  int sign = 0;   // +1 / -1
  std::string name() const { return std::to_string(label) + (sign > 0 ? "+" : "-"); }
  bool operator==(const SevenType& o) const { return label == o.label && sign == o.sign; }
  bool operator!=(const SevenType& o) const { return !(*this == o); }
};

int type_id(int n, int sign);                 // 0..13
SevenType type_of_id(int id);                 // label = n in 1..7
SevenType parse_type(const std::string& s);   // "3-" etc.
const Bits42& reference_table(int type_id);
// Exact match against the 14 reference tables; throws InconsistentSevenTable.
int classify_seven_table(const Bits42& t);

// ----- dihedral group -----

struct D8 {
  std::array<int, 8> perm{};  // perm[i-1] = image of label i
  bool reflection = false;

  int apply(int label) const { return perm[label - 1]; }
  D8 compose(const D8& o) const;  // (this after o): apply o first
  D8 inverse() const;
  bool operator==(const D8& o) const { return perm == o.perm; }
  std::string name() const;
  static D8 identity();
  static D8 rotation(int k);
  static D8 axis(int a, int b);  // reflection with fixed labels a, b (opposite)
  static const std::vector<D8>& all();  // 16 elements, identity first
};

// ----- 8-point lists -----

// Restriction of the table to the seven points != i, relabeled to positions
// 1..7 in cyclic order starting after i.
Bits42 restriction(const PositionTable& t, int i);
// Position -> label transport for sub-list i.
int transport_label(int i, int position);

SevenType seven_type_of(const PositionTable& t, int i);  // label in 1..8

struct ListCode {
  PositionTable table;
  std::array<SevenType, 8> types;  // types[i-1] = sub-list i
  std::array<int, 8> dist;         // 1->2, ..., 8->1
  int sigma = 0;
};

ListCode make_list_code(const PositionTable& t);
std::string list_text(const ListCode& c);

PositionTable apply_d8(const D8& g, const PositionTable& t);
std::pair<PositionTable, D8> canonical_form(const PositionTable& t);
std::vector<D8> stabilizer(const PositionTable& t);

// Reconstruct the full table from the eight seven-point types; every entry is
// covered twice, inconsistency throws.
PositionTable table_from_types(const std::array<SevenType, 8>& types);

// Flip the six entries of the coconic 6-set `mask` (bit = label-1).
PositionTable flip_six(const PositionTable& t, int mask);

// Distance octuple helpers.
std::array<int, 8> distance_octuple(const PositionTable& t);
// D8 action on octuples (rotations cycle, reflections reverse and negate).
std::array<int, 8> octuple_apply(const D8& g, const std::array<int, 8>& d);
// True iff some g in D8 maps octuple a to b.
bool octuple_equivalent(const std::array<int, 8>& a, const std::array<int, 8>& b);

}  // namespace octet
