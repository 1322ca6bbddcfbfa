#include "clean_sombor/clean_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace clean_sombor {

SimpleGraph SimpleGraph::from_edges(std::size_t vertex_count, const std::vector<Edge>& edges) {
  SimpleGraph g;
  g.adjacency_.resize(vertex_count);
  for (const auto& [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw std::invalid_argument("SimpleGraph: edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("SimpleGraph: self-loop at " + std::to_string(a));
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("SimpleGraph: duplicate edge");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool SimpleGraph::adjacent(VertexIndex a, VertexIndex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexIndex i = 0; i < adjacency_.size(); ++i) {
    for (VertexIndex j : adjacency_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

const char* to_string(Variant v) { return v == Variant::full ? "full" : "cl2"; }

GraphTooLarge::GraphTooLarge(std::uint64_t n, std::size_t vertices, std::size_t cap)
    : std::length_error("clean graph of Z_" + std::to_string(n) + " has " +
                        std::to_string(vertices) + " vertices, above the cap of " +
                        std::to_string(cap)),
      vertices_(vertices),
      cap_(cap) {}

std::size_t clean_graph_order(const ResidueRing& ring, Variant variant) {
  const std::size_t classes = (std::size_t{1} << ring.prime_count) - (variant == Variant::cl2);
  return classes * euler_phi(ring);
}

class CleanGraphBuilder {
 public:
  static CleanGraph build(const ResidueRing& ring, Variant variant, std::size_t max_vertices) {
    const std::size_t order = clean_graph_order(ring, variant);
    if (order > max_vertices) throw GraphTooLarge(ring.n, order, max_vertices);

    CleanGraph g;
    g.ring_ = ring;
    g.variant_ = variant;
    g.idempotents_ = idempotents(ring);
    g.units_ = classify_units(ring);

    for (unsigned c = 0; c < g.idempotents_.size(); ++c) {
      const Residue e = g.idempotents_[c];
      if (variant == Variant::cl2 && e == 0) continue;
      auto& block = g.partition_[c];
      for (const auto* group : {&g.units_.self_inverse, &g.units_.non_self_inverse}) {
        for (Residue u : *group) {
          block.push_back(static_cast<VertexIndex>(g.vertices_.size()));
          g.vertices_.push_back({e, u, c, group == &g.units_.self_inverse});
        }
      }
    }

    // Idempotent products depend only on the two classes.
    const std::size_t classes = g.idempotents_.size();
    std::vector<char> annihilates(classes * classes);
    for (std::size_t a = 0; a < classes; ++a) {
      for (std::size_t b = 0; b < classes; ++b) {
        annihilates[a * classes + b] = mul_mod(g.idempotents_[a], g.idempotents_[b], ring.n) == 0;
      }
    }

    const auto& vs = g.vertices_;
    auto& adjacency = g.graph_.adjacency_;
    adjacency.assign(vs.size(), {});
    std::size_t edges = 0;
    for (VertexIndex i = 0; i < vs.size(); ++i) {
      const std::size_t row = vs[i].class_index * classes;
      // u*v == 1 exactly when v is the (unique) inverse of u.
      const Residue u_inverse = mod_inverse(vs[i].unit, ring);
      for (VertexIndex j = i + 1; j < vs.size(); ++j) {
        if (annihilates[row + vs[j].class_index] || vs[j].unit == u_inverse) {
          adjacency[i].push_back(j);
          adjacency[j].push_back(i);
          ++edges;
        }
      }
    }
    g.graph_.edge_count_ = edges;
    return g;
  }
};

CleanGraph build_clean_graph(const ResidueRing& ring, Variant variant, std::size_t max_vertices) {
  return CleanGraphBuilder::build(ring, variant, max_vertices);
}

std::vector<std::vector<VertexIndex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<VertexIndex>> out;
  std::vector<char> seen(g.vertex_count());
  for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexIndex> component;
    std::queue<VertexIndex> frontier;
    frontier.push(start);
    seen[start] = 1;
    while (!frontier.empty()) {
      const VertexIndex v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (VertexIndex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::size_t predicted_degree(unsigned k, std::uint64_t phi, bool unit_class, bool self_inverse) {
  if (k == 1) return self_inverse ? 0 : 1;
  const std::size_t top = std::size_t{1} << k;
  if (unit_class) return self_inverse ? top - 2 : top - 1;
  return self_inverse ? top - 3 + phi : top - 2 + phi;
}

DegreeClassReport degree_class_report(const CleanGraph& g) {
  if (g.variant() != Variant::cl2) {
    throw std::invalid_argument("degree_class_report: requires a Cl2 graph");
  }
  DegreeClassReport report;
  report.k = g.ring().prime_count;
  report.phi = g.units().phi;
  report.r = g.units().r;
  report.all_match = true;

  for (const auto& [class_index, members] : g.partition()) {
    for (bool self_inverse : {true, false}) {
      DegreeCell cell;
      cell.class_index = class_index;
      cell.idempotent = g.idempotent_list()[class_index];
      cell.self_inverse = self_inverse;
      for (VertexIndex v : members) {
        if (g.vertex(v).self_inverse != self_inverse) continue;
        ++cell.observed[g.degree(v)];
        ++cell.size;
      }
      if (cell.size == 0) continue;
      cell.predicted = predicted_degree(report.k, report.phi, cell.idempotent == 1, self_inverse);
      cell.match = cell.observed.size() == 1 && cell.observed.begin()->first == cell.predicted;
      report.all_match = report.all_match && cell.match;
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace clean_sombor
