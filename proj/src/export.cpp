#include "carterlink/export.hpp"
#include "carterlink/qform.hpp"

#include <algorithm>

#include <sstream>

namespace carterlink {

using nlohmann::json;

json rat_to_json(const Rat& r) {
  return json{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

json matrix_to_json(const RatMatrix& m) {
  Int k = m.common_denominator();
  json scaled = json::array();
  json entries = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    json erow = json::array();
    for (int j = 0; j < m.n(); ++j) {
      Rat v = m.at(i, j) * k;
      row.push_back(rat_num(v).str());
      erow.push_back(rat_to_json(m.at(i, j)));
    }
    scaled.push_back(std::move(row));
    entries.push_back(std::move(erow));
  }
  return json{{"n", m.n()},
              {"prefactor_den", k.str()},
              {"scaled", std::move(scaled)},
              {"entries", std::move(entries)}};
}

std::string matrix_to_text(const RatMatrix& m) {
  Int k = m.common_denominator();
  std::ostringstream os;
  if (k != 1) os << "1/" << k << " *\n";
  // column widths
  std::vector<std::vector<std::string>> cells(m.n(), std::vector<std::string>(m.n()));
  size_t w = 1;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      Rat v = m.at(i, j) * k;
      cells[i][j] = rat_num(v).str();
      w = std::max(w, cells[i][j].size());
    }
  for (int i = 0; i < m.n(); ++i) {
    os << "[ ";
    for (int j = 0; j < m.n(); ++j) {
      os << std::string(w - cells[i][j].size(), ' ') << cells[i][j];
      os << (j + 1 == m.n() ? " ]\n" : "  ");
    }
  }
  return os.str();
}

json diagram_to_json(const CarterDiagram& d) {
  json vertices = json::array();
  for (int v = 0; v < d.size(); ++v) vertices.push_back(d.vertex_name(v));
  json edges = json::array();
  for (const auto& e : d.edges)
    edges.push_back(json{{"u", d.vertex_name(e.u)}, {"v", d.vertex_name(e.v)}, {"sign", e.sign}});
  json out{{"id", d.id.name()},
           {"alpha", d.n_alpha},
           {"beta", d.n_beta},
           {"vertices", std::move(vertices)},
           {"edges", std::move(edges)}};
  if (d.id.fam == Family::A) {
    // chain display order a1, b1, a2, b2, ...
    json lin = json::array();
    for (int p = 1; p <= d.size(); ++p)
      lin.push_back(d.vertex_name(p % 2 == 1 ? (p - 1) / 2 : d.n_alpha + p / 2 - 1));
    out["linear_order"] = std::move(lin);
  }
  return out;
}

std::string diagram_to_dot(const CarterDiagram& d) {
  std::ostringstream os;
  os << "graph \"" << d.id.name() << "\" {\n";
  for (int v = 0; v < d.size(); ++v)
    os << "  " << d.vertex_name(v) << " [shape=circle];\n";
  for (const auto& e : d.edges) {
    os << "  " << d.vertex_name(e.u) << " -- " << d.vertex_name(e.v);
    if (e.sign > 0) os << " [style=dashed]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

namespace {

std::string label_name(const Label& v) {
  std::ostringstream os;
  os << "\"";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "\"";
  return os.str();
}

} // namespace

json system_to_json(const LinkageSystem& s) {
  json vertices = json::array();
  for (const Label& v : s.vertices) vertices.push_back(v);
  json edges = json::array();
  for (const auto& e : s.edges) edges.push_back(json::array({e.u, e.v, e.vertex}));
  json parts = json::array();
  for (const auto& p : s.parts) {
    parts.push_back(json{{"p", rat_to_json(p.p)},
                         {"type", std::string(1, p.type)},
                         {"members", p.members}});
  }
  json per_ext = json::object();
  for (const auto& [name, labels] : s.per_extension) {
    json arr = json::array();
    for (const Label& v : labels) arr.push_back(v);
    per_ext[name] = std::move(arr);
  }
  json gap = json::array();
  for (const Label& v : s.inequality_only) gap.push_back(v);
  return json{{"diagram", s.diagram.name()},
              {"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"components", std::move(parts)},
              {"per_extension", std::move(per_ext)},
              {"zero_vectors_excluded", s.zero_vectors_excluded},
              {"inequality_only", std::move(gap)}};
}

std::string system_to_dot(const CarterDiagram& d, const LinkageSystem& s) {
  std::ostringstream os;
  os << "graph \"L(" << d.id.name() << ")\" {\n";
  // cluster loctets when the diagram has a branch point
  if (d.has_branch_point()) {
    try {
      LoctetDecomposition dec = detect_loctets(d, s);
      int c = 0;
      for (const auto& loc : dec.loctets) {
        os << "  subgraph cluster_" << c++ << " {\n    label=\"" << loc.type_name() << "\";\n";
        for (const auto& cell : loc.cells) os << "    " << label_name(cell) << ";\n";
        os << "  }\n";
      }
    } catch (const std::exception&) {
      // fall through to a flat rendering
    }
  }
  for (const auto& e : s.edges) {
    os << "  " << label_name(s.vertices[e.u]) << " -- " << label_name(s.vertices[e.v])
       << " [label=\"" << d.vertex_name(e.vertex) << "\"";
    // reflections at a vertex carrying a dotted edge are rendered dashed
    bool dotted = false;
    for (int u : d.neighbors(e.vertex)) dotted = dotted || d.edge_sign(e.vertex, u) > 0;
    if (dotted) os << ", style=dashed";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

json orbit_to_json(const CarterDiagram& d, const std::set<std::vector<int>>& orbit) {
  // same schema as a linkage system: vertices plus reflection edges
  std::vector<std::vector<int>> verts(orbit.begin(), orbit.end());
  auto gram = d.gram();
  json arr = json::array();
  for (const auto& v : verts) arr.push_back(v);
  json edges = json::array();
  auto index_of = [&](const std::vector<int>& v) {
    auto it = std::lower_bound(verts.begin(), verts.end(), v);
    return static_cast<int>(it - verts.begin());
  };
  for (int u = 0; u < static_cast<int>(verts.size()); ++u)
    for (int t = 0; t < d.size(); ++t) {
      auto w = dual_reflect_unbounded(verts[u], t, gram);
      if (w == verts[u]) continue;
      int v = index_of(w);
      if (v > u) edges.push_back(json::array({u, v, t}));
    }
  return json{{"diagram", d.id.name()},
              {"size", orbit.size()},
              {"vertices", std::move(arr)},
              {"edges", std::move(edges)}};
}

} // namespace carterlink
