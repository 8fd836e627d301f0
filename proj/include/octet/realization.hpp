#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octet/geometry.hpp"
#include "octet/list_code.hpp"

namespace octet {

struct Configuration {
  std::array<ProjPoint, 8> pts;  // label i = pts[i-1]; affine chart z=1, z > 0
  std::vector<std::string> provenance;

  const ProjPoint& at(int label) const { return pts[label - 1]; }
};

struct ConvexReport {
  bool ok = false;
  std::string error_kind;         // ThreeCollinear | NotConvex | LabelingNotCyclic
  std::array<int, 3> witness{};   // offending labels (when applicable)
  std::vector<int> hull_order;    // suggested relabeling for LabelingNotCyclic
};

ConvexReport check_convex_position(const std::array<ProjPoint, 8>& pts);
void require_convex(const Configuration& c);  // throws with the report's kind

// All 56 conics of a configuration, built on demand.
struct ConicCache {
  const Configuration* cfg;
  mutable std::array<std::optional<Conic>, 56> conics;
  explicit ConicCache(const Configuration& c) : cfg(&c) {}
  const Conic& of_subset(int subset_index) const;
};

// Exact table; throws NonGenericOnConic when a point lies on one of the conics.
PositionTable compute_position_table(const Configuration& c);

// Move point `p` along the straight segment towards the affine target until
// just past the first crossing with the conic through `subset_mask` (bit =
// label-1; must not contain p) and strictly before any other wall. The new
// configuration's table equals the old one with the 6-set subset|{p} flipped;
// this is verified before returning. Snapping replaces the landed point by a
// simpler nearby rational point when the verification still passes.
Configuration move_point_across(const Configuration& c, int p, const Rat& tx, const Rat& ty,
                                int subset_mask, bool snap = true);
// Variant reusing a precomputed table and conic cache for the source.
Configuration move_point_across(const Configuration& c, const PositionTable& table,
                                const ConicCache& cache, int p, const Rat& tx, const Rat& ty,
                                int subset_mask, bool snap = true);

// Specialization moving p towards the consecutive point `toward_label`.
Configuration move_until_crossing(const Configuration& c, int p, int toward_label,
                                  int subset_mask);

// Extremal realization: eight points on a conic, the extremal point pushed
// in/out, and the type's defining pair split off the conic. The result is
// verified: generic, convex, sub-list 8 equals the type, point 8 extremal.
Configuration realize_extremal_h8(const SevenType& type, bool maximal);

// The two wall configurations with four six-point conics.
Configuration four_reducible_config(int variant);

// Conics through exactly six of the eight points (exact). Throws SevenCoconic
// if seven points are coconic; a fully coconic octuple reports count -1.
int count_six_point_conics(const Configuration& c, std::vector<int>* masks = nullptr);

// Generic configurations reached from the four-reducible walls by the
// published perturbation recipes (used by the acceptance suite).
std::vector<Configuration> four_reducible_perturbations(int variant);

// Rational-parameter point on the circle of radius `r` (tan-half-angle u).
ProjPoint circle_point(const Rat& u, const Rat& r = Rat(1));

// Replace coordinates by continued-fraction approximations of themselves
// whenever the position table (and convexity) is preserved; keeps later exact
// arithmetic small.
Configuration simplify_points(const Configuration& c);
Configuration simplify_points(const Configuration& c, const PositionTable& expected);

std::string config_brief(const Configuration& c);

}  // namespace octet
