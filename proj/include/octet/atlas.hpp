#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octet/list_code.hpp"
#include "octet/realization.hpp"

namespace octet {

struct AtlasNode {
  PositionTable table;
  ListCode code;
  int orbit = -1;
  Configuration realization;
  // undirected edges: coconic 6-set mask -> neighbor node index
  std::vector<std::pair<int, int>> edges;
};

struct AtlasOrbit {
  PositionTable canonical;
  std::vector<int> members;           // node indices
  std::vector<int> published_labels;  // L_n whose published table lies in this orbit
  int principal_label = 0;            // smallest published principal label, 0 if none
};

struct Atlas {
  std::vector<AtlasNode> nodes;
  std::vector<AtlasOrbit> orbits;
  std::map<std::array<uint64_t, 3>, int> index;        // table key -> node
  std::map<std::array<uint64_t, 3>, int> orbit_index;  // canonical key -> orbit
  // distance octuple -> nodes; a handful of octuples are shared by two lists
  std::map<std::array<int, 8>, std::vector<int>> octuple_index;
  long long certified_moves = 0;
  long long certified_edges = 0;
  long long edge_count = 0;

  int node_of(const PositionTable& t) const;            // -1 when absent
  int orbit_of(const PositionTable& t) const;           // throws UnknownList
  int orbit_by_label(int published_label) const;        // -1 when absent
  const AtlasNode& node(int i) const { return nodes[i]; }
};

struct BuildOptions {
  int jobs = 1;
  bool certify_all_edges = false;  // tree edges are always certified
};

// Combinatorially admissible wall crossings from a list: 6-set masks whose
// flip keeps both changed sub-lists classifiable.
std::vector<int> applicable_change_masks(const PositionTable& t);

// Geometric certification of one wall crossing from a realized configuration.
// Tries the six equivalent moving points and several targets. Returns the new
// configuration realizing flip_six(table, mask).
Configuration certify_crossing(const Configuration& c, const PositionTable& table,
                               const ConicCache& cache, int six_mask);

// The default seeds: the 28 extremal realizations for sub-list 8 (12 orbits).
std::vector<Configuration> default_seeds();

Atlas build_atlas(const std::vector<Configuration>& seeds, const BuildOptions& opt = {});

// ----- queries -----

bool is_nodal_orbit(const Atlas& a, int orbit);
// which nodal-cubic families realize the orbit (from the published data)
std::string nodal_families(const Atlas& a, int orbit);

struct ChangeCensus {
  long long edge_instances = 0;    // undirected edges in the atlas graph
  int directed_patterns = 0;       // distinct (hF=x->y, hG=u->v) value patterns
  int pattern_orbits = 0;          // D8-orbits of directed patterns
};
ChangeCensus elementary_change_census(const Atlas& a);

// Unordered pairs {L, sigma_ab L} adjacent through the wall complementary to
// the axis {a, b}.
std::vector<std::pair<int, int>> symmetric_adjacent_pairs(const Atlas& a, int axis_a, int axis_b);

// Octuple decoding (Prop 3). Throws NotFound.
const AtlasNode& decode_from_octuple(const Atlas& a, const std::array<int, 8>& d);

// Extremal list in the atlas: sub-list `point` equal to `type`, with `point`
// inside (min) or outside (max) every conic it is off.
int extremal_node(const Atlas& a, int point, const SevenType& type, bool maximal);

}  // namespace octet
