#include "octet/json_io.hpp"

#include <sstream>

#include "json.hpp"
#include "octet/paper_data.hpp"

namespace octet {

using nlohmann::json;

uint64_t fnv1a64(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

static std::string key_hex(const PositionTable& t) {
  auto k = t.key();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx%016llx%016llx", (unsigned long long)k[2],
                (unsigned long long)k[1], (unsigned long long)k[0]);
  return buf;
}

std::string config_to_json(const Configuration& c) {
  json j;
  j["chart"] = "z=1";
  json pts = json::array();
  for (int i = 1; i <= 8; i++)
    pts.push_back({rat_to_string(c.at(i).ax()), rat_to_string(c.at(i).ay())});
  j["points"] = pts;
  j["provenance"] = c.provenance;
  return j.dump(2);
}

Configuration config_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("points") || !j["points"].is_array() || j["points"].size() != 8)
    throw Error("BadInput", "configuration needs exactly 8 points");
  Configuration c;
  for (int i = 0; i < 8; i++) {
    auto& p = j["points"][i];
    c.pts[i] = ProjPoint(rat_from_string(p.at(0).get<std::string>()),
                         rat_from_string(p.at(1).get<std::string>()));
  }
  if (j.contains("provenance"))
    for (auto& s : j["provenance"]) c.provenance.push_back(s.get<std::string>());
  return c;
}

static json types_json(const ListCode& code) {
  json t = json::array();
  for (int i = 0; i < 8; i++) t.push_back(code.types[i].name());
  return t;
}

std::string list_report_json(const ListCode& code, const Atlas* atlas) {
  json j;
  j["types"] = types_json(code);
  j["distances"] = code.dist;
  j["sigma"] = code.sigma;
  j["text"] = list_text(code);
  auto [canon, g] = canonical_form(code.table);
  j["canonical_key"] = key_hex(canon);
  j["canonical_witness"] = g.name();
  j["stabilizer_order"] = stabilizer(code.table).size();
  if (atlas) {
    try {
      int orbit = atlas->orbit_of(code.table);
      const auto& o = atlas->orbits[orbit];
      j["orbit"] = o.principal_label ? "L" + std::to_string(o.principal_label) : "unlabeled";
      json labels = json::array();
      for (int l : o.published_labels) labels.push_back("L" + std::to_string(l));
      j["orbit_labels"] = labels;
      j["nodal"] = is_nodal_orbit(*atlas, orbit);
      std::string fam = nodal_families(*atlas, orbit);
      if (!fam.empty()) j["nodal_families"] = fam;
    } catch (const Error&) {
      j["orbit"] = "unknown";
    }
  }
  return j.dump(2);
}

std::string atlas_to_json(const Atlas& a) {
  json nodes = json::object();
  for (const auto& n : a.nodes) {
    json e;
    e["types"] = types_json(n.code);
    e["distances"] = n.code.dist;
    e["sigma"] = n.code.sigma;
    e["orbit"] = n.orbit;
    json pts = json::array();
    for (int i = 1; i <= 8; i++)
      pts.push_back({rat_to_string(n.realization.at(i).ax()),
                     rat_to_string(n.realization.at(i).ay())});
    e["realization"] = pts;
    json edges = json::array();
    for (auto& [mask, j2] : n.edges) {
      json ed;
      json wall = json::array();
      for (int x = 1; x <= 8; x++)
        if (mask & (1 << (x - 1))) wall.push_back(x);
      ed["wall"] = wall;
      ed["neighbor"] = key_hex(a.nodes[j2].table);
      edges.push_back(ed);
    }
    e["edges"] = edges;
    nodes[key_hex(n.table)] = e;
  }
  json orbits = json::array();
  for (const auto& o : a.orbits) {
    json e;
    e["canonical"] = key_hex(o.canonical);
    json labels = json::array();
    for (int l : o.published_labels) labels.push_back(l);
    e["published_labels"] = labels;
    json members = json::array();
    for (int m : o.members) members.push_back(key_hex(a.nodes[m].table));
    std::sort(members.begin(), members.end());
    e["members"] = members;
    orbits.push_back(e);
  }
  json j;
  j["lists"] = nodes;
  j["orbits"] = orbits;
  json man;
  man["list_count"] = a.nodes.size();
  man["orbit_count"] = a.orbits.size();
  man["edge_count"] = a.edge_count;
  man["certified_moves"] = a.certified_moves;
  char cks[32];
  std::snprintf(cks, sizeof cks, "%016llx", (unsigned long long)fnv1a64(nodes.dump()));
  man["lists_checksum"] = cks;
  std::snprintf(cks, sizeof cks, "%016llx", (unsigned long long)fnv1a64(orbits.dump()));
  man["orbits_checksum"] = cks;
  j["manifest"] = man;
  return j.dump(2);
}

std::string pencil_report_json(const PencilAnalysis& a) {
  json j;
  json basis = json::array();
  auto form = [](const CubicForm& f) {
    json c = json::array();
    for (int i = 0; i < 10; i++) c.push_back(f.c[i].get_str());
    return c;
  };
  basis.push_back(form(a.pencil.f0));
  basis.push_back(form(a.pencil.f1));
  j["basis"] = basis;
  j["ninth_point"] = {rat_to_string(a.pencil.ninth.ax()), rat_to_string(a.pencil.ninth.ay())};
  j["generic"] = a.generic;
  json disc = json::array();
  for (auto& c : a.pencil.disc.c) disc.push_back(rat_to_string(c));
  j["discriminant"] = disc;
  if (a.generic) {
    j["census"] = {{"n", a.n_real},
                   {"n1", a.n_isolated},
                   {"n2", a.n_empty_loop},
                   {"n3", a.n_distinguished}};
  }
  json members = json::array();
  for (const auto& m : a.members) {
    json e;
    if (m.t_rational) {
      e["t"] = rat_to_string(m.t_value);
    } else {
      e["t_interval"] = {rat_to_string(m.t.iv.lo), rat_to_string(m.t.iv.hi)};
    }
    e["kind"] = m.kind == MemberKind::IsolatedNode
                    ? "isolated"
                    : (m.kind == MemberKind::CrossingNode ? "crossing" : "reducible");
    if (m.kind == MemberKind::CrossingNode) {
      e["loop_points"] = m.loop_points;
      e["distinguished"] = m.distinguished;
      if (!m.circuit.empty()) {
        std::string w;
        for (int s : m.circuit) w += s == 0 ? 'X' : char('0' + s);
        e["circuit"] = w;
      }
    }
    if (m.kind == MemberKind::Reducible) {
      e["line"] = m.line_triple;
      e["completely_reducible"] = m.completely_reducible;
    }
    members.push_back(e);
  }
  j["members"] = members;
  return j.dump(2);
}

}  // namespace octet
