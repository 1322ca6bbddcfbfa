#include "clean_sombor/graph_export.hpp"

#include <sstream>

namespace clean_sombor {

namespace {
// Size of the "set312" Graphviz colour scheme.
constexpr unsigned kPaletteSize = 12;
}  // namespace

std::string to_dot(const CleanGraph& g) {
  std::ostringstream os;
  os << "graph clean_" << to_string(g.variant()) << "_Z" << g.ring().n << " {\n";
  os << "  node [shape=circle, style=filled, colorscheme=set312];\n";
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    const CleanVertex& v = g.vertex(i);
    os << "  v" << i << " [label=\"(" << v.idempotent << ',' << v.unit
       << ")\", fillcolor=" << (v.class_index % kPaletteSize) + 1 << "];\n";
  }
  for (const auto& [a, b] : g.graph().edges()) {
    os << "  v" << a << " -- v" << b << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const CleanGraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.ring().n;
  doc["variant"] = to_string(g.variant());
  auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    const CleanVertex& v = g.vertex(i);
    vertices.push_back({{"e", v.idempotent},
                        {"u", v.unit},
                        {"class", v.class_index},
                        {"self_inverse", v.self_inverse},
                        {"degree", g.degree(i)}});
  }
  auto& edges = doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : g.graph().edges()) edges.push_back({a, b});
  return doc;
}

}  // namespace clean_sombor
