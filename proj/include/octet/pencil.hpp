#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octet/algebraic.hpp"
#include "octet/geometry.hpp"
#include "octet/list_code.hpp"
#include "octet/realization.hpp"

namespace octet {

struct Pencil {
  std::array<ProjPoint, 8> base;
  CubicForm f0, f1;  // basis; scaled so disc(t) has degree 12
  ProjPoint ninth;
  Poly disc;     // primitive integer polynomial in t, degree 12
  Poly disc_sf;  // squarefree part
};

// Exact pencil basis (nullspace of the 8x10 condition matrix), ninth base
// point by resultant elimination, and the degree-12 parameter discriminant
// via the determinant formula for the resultant of the three partials.
// Throws RankDeficient when the points impose dependent conditions.
Pencil pencil_through(const std::array<ProjPoint, 8>& pts);

// member f0 + t f1 with rational t, cleared to integers
CubicForm member_at(const Pencil& p, const Rat& t);

// discriminant of a single integer cubic (zero iff singular); the value is
// the classical resultant of the partials up to a fixed constant
Int cubic_disc_value(const CubicForm& f);

enum class MemberKind { IsolatedNode, CrossingNode, Reducible };

struct SingularMember {
  AlgebraicReal t;
  bool t_rational = false;
  Rat t_value;  // when t_rational
  MemberKind kind{};
  std::vector<int> loop_points;  // labels 1..9 on the loop (crossing members)
  // circuit word of the nodal curve: 0 = node, 1..9 = base labels; the loop
  // block sits between the two node symbols
  std::vector<int> circuit;
  bool distinguished = false;
  // reducible members
  std::array<int, 3> line_triple{};
  bool completely_reducible = false;
  // approximate node location (reporting only; classification is exact)
  std::optional<std::pair<Rat, Rat>> node_box_center;
};

struct PencilAnalysis {
  Pencil pencil;
  bool generic = true;  // no reducible members, all roots simple
  int n_real = 0, n_isolated = 0, n_empty_loop = 0, n_distinguished = 0;
  std::vector<SingularMember> members;  // ordered by t (circular: wrap at infinity)
  std::vector<int> distinguished_order; // indices into members, cyclic
};

PencilAnalysis analyze_pencil(const std::array<ProjPoint, 8>& pts);

// Canonical combinatorial pencil: the cyclic sequence of the 8 distinguished
// circuit words up to D8 relabeling, sequence rotation and reversal, and
// per-word rotation/reversal.
struct CombinatorialPencil {
  std::vector<std::vector<int>> circuits;  // raw cyclic sequence
  std::string canonical;
};
CombinatorialPencil combinatorial_pencil(const PencilAnalysis& a);

// Limit prediction for the motion 8 -> 1 (combinatorial, from the list only).
struct DegenerationPrediction {
  bool nodal_limit = false;       // node at the merged point 8=1
  bool maybe_non_real = false;    // flagged ambiguous cases
  int conic_mask = 0;             // reducible limit: five-point conic
  int line_point = 0;             // reducible limit: line through 1 and P
  std::vector<std::string> pair_names;  // predicted distinguished pairs
};
DegenerationPrediction predict_degeneration(const ListCode& code);

struct ReducibleMember {
  std::array<int, 3> line;      // labels 1..9 (9 = ninth base point)
  std::vector<int> conic_points;
  bool completely_reducible = false;
  Rat t;
};
// All reducible members, from collinear base triples; valid for non-convex
// and degenerate inputs as long as the pencil exists.
std::vector<ReducibleMember> reducible_census(const Pencil& p);

// Rational nine-point configuration for the classical smoke test.
std::array<ProjPoint, 9> pappus_configuration();

}  // namespace octet
