#pragma once

#include <array>
#include <string>
#include <vector>

namespace octet {

// Embedded reference classification data. Everything here is validated by the
// test suite against independently computed results (atlas enumeration,
// geometric realizations), so a transcription error cannot pass silently.

// One row of a seven-point reference table: for the classification type named
// `type` ("1+".."7-"), the conic through the five points `conic` (labels in
// 1..7) has the listed points inside ("": none, "4": point 4, "47": 4 and 7).
struct SevenTableRow {
  const char* type;
  const char* conic;
  const char* inside;
};
extern const SevenTableRow kSevenTableRows[];
extern const int kSevenTableRowCount;

// The defining "bold" pair of each seven-point type: type holds iff
// `in_point` is inside and `out_point` outside of `conic`.
struct SevenBoldPair {
  const char* type;
  const char* conic;
  int in_point, out_point;
};
extern const SevenBoldPair kSevenBoldPairs[14];

struct TypeRef {
  int label;  // point label
  int sign;   // +1 / -1
};

// The 95 published lists (sub-lists 1..7 plus the fixed sub-list 8 per
// figure); `principal` marks orbit representatives.
struct PublishedList {
  int n;
  bool principal;
  std::array<TypeRef, 7> types;  // sub-lists 1..7
  TypeRef h8;
};
extern const PublishedList kPublishedLists[];
extern const int kPublishedListCount;

// Distance octuples (1->2, ..., 8->1) and their sum for the 49 principal lists.
struct PublishedOctuple {
  int n;
  std::array<int, 8> d;
  int sigma;
};
extern const PublishedOctuple kPublishedOctuples[];
extern const int kPublishedOctupleCount;

// Inductive construction rows: each row starts from an already-realized list
// and alternates elementary changes / relabelings with expected list numbers.
struct InductStep {
  enum Kind { List, Change, Symmetry } kind;
  int a, b;  // List: a = L_n; Change: (sub-list a, sub-list b); Symmetry: axis a-b
};
const std::vector<std::vector<InductStep>>& induct_sequences();

// The 19 representative directed elementary changes.
struct RepresentativeChange {
  int sub_a;
  TypeRef a_from, a_to;
  int sub_b;
  TypeRef b_from, b_to;
};
extern const RepresentativeChange kRepresentativeChanges[];
extern const int kRepresentativeChangeCount;

// Extremal anchors: published numbering of extremal lists.
struct ExtremalAnchor {
  int n;           // L_n
  int point;       // the extremal point
  const char* type;  // value of sub-list `point`
  bool maximal;    // max or min
};
extern const ExtremalAnchor kExtremalAnchors[12];

// The four nodal orbits (published labels of their principal lists).
extern const int kNodalOrbitLabels[4];
// Expected number of distinct combinatorial pencils per nodal orbit.
extern const int kNodalPencilMultiplicity[4];

// Pencil-class identities among non-nodal principal lists: each pair (n, m)
// has identical canonical combinatorial pencils.
extern const std::array<std::pair<int, int>, 13> kEqualPencilPairs;

// Published pencil rows (sequences of named cubics with arc annotations),
// retained verbatim for the best-effort name matcher.
struct PublishedPencil {
  const char* lists;  // the L_n label(s) this row corresponds to ("" for nodal rows)
  const char* cubics; // semicolon-separated cubic names
  const char* arcs;   // semicolon-separated arc annotations
};
extern const PublishedPencil kPublishedPencils[];
extern const int kPublishedPencilCount;

}  // namespace octet
