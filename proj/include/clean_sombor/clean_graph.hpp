#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "clean_sombor/ring_arith.hpp"

namespace clean_sombor {

using VertexIndex = std::uint32_t;
using Edge = std::pair<VertexIndex, VertexIndex>;

/// Undirected simple graph stored as sorted adjacency lists.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints.
  static SimpleGraph from_edges(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adjacency_[v]; }
  std::size_t degree(VertexIndex v) const { return adjacency_[v].size(); }
  bool adjacent(VertexIndex a, VertexIndex b) const;

  /// Edges as (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;

 private:
  friend class CleanGraphBuilder;

  std::vector<std::vector<VertexIndex>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class Variant { full, cl2 };

const char* to_string(Variant v);

struct CleanVertex {
  Residue idempotent = 0;
  Residue unit = 0;
  /// Position of `idempotent` in the ascending idempotent list of Z_n, so
  /// class 0 is e = 0 and class 1 is e = 1.
  unsigned class_index = 0;
  bool self_inverse = false;
};

inline constexpr std::size_t kDefaultMaxVertices = 20'000;

class GraphTooLarge : public std::length_error {
 public:
  GraphTooLarge(std::uint64_t n, std::size_t vertices, std::size_t cap);
  std::size_t vertices() const { return vertices_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t vertices_;
  std::size_t cap_;
};

/// Cl(Z_n) or its induced subgraph Cl2(Z_n) on nonzero idempotents.
///
/// Vertices are ordered idempotent-major; within a class the self-inverse
/// units come first, then the remaining units, each ascending.
class CleanGraph {
 public:
  const ResidueRing& ring() const { return ring_; }
  Variant variant() const { return variant_; }
  const std::vector<CleanVertex>& vertices() const { return vertices_; }
  const CleanVertex& vertex(VertexIndex v) const { return vertices_[v]; }
  const SimpleGraph& graph() const { return graph_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::size_t degree(VertexIndex v) const { return graph_.degree(v); }
  const std::map<unsigned, std::vector<VertexIndex>>& partition() const { return partition_; }
  const std::vector<Residue>& idempotent_list() const { return idempotents_; }
  const UnitClassification& units() const { return units_; }

 private:
  friend class CleanGraphBuilder;

  ResidueRing ring_;
  Variant variant_ = Variant::cl2;
  std::vector<Residue> idempotents_;
  UnitClassification units_;
  std::vector<CleanVertex> vertices_;
  SimpleGraph graph_;
  std::map<unsigned, std::vector<VertexIndex>> partition_;
};

/// Vertex count of the requested variant without building it.
std::size_t clean_graph_order(const ResidueRing& ring, Variant variant);

/// Builds the graph by testing  e*f == 0  or  u*v == 1  on every pair of
/// distinct vertices. Throws GraphTooLarge above `max_vertices`.
CleanGraph build_clean_graph(const ResidueRing& ring, Variant variant,
                             std::size_t max_vertices = kDefaultMaxVertices);

/// Components ordered by smallest member; members ascending.
std::vector<std::vector<VertexIndex>> connected_components(const SimpleGraph& g);
inline std::vector<std::vector<VertexIndex>> connected_components(const CleanGraph& g) {
  return connected_components(g.graph());
}

struct DegreeCell {
  unsigned class_index = 0;
  Residue idempotent = 0;
  bool self_inverse = false;
  std::map<std::size_t, std::size_t> observed;  // degree -> multiplicity
  std::size_t size = 0;
  std::size_t predicted = 0;
  bool match = false;
};

struct DegreeClassReport {
  unsigned k = 0;
  std::uint64_t phi = 0;
  std::uint64_t r = 0;
  std::vector<DegreeCell> cells;
  bool all_match = false;
};

/// Degree predicted for a Cl2 vertex. k = 1: 0 for self-inverse units and 1
/// otherwise. k >= 2: 2^k - 2 / 2^k - 1 in the class of e = 1, and
/// 2^k - 3 + phi / 2^k - 2 + phi in every other class.
std::size_t predicted_degree(unsigned k, std::uint64_t phi, bool unit_class, bool self_inverse);

/// Compares each (class, self-inverse) cell with predicted_degree().
/// Mismatches are recorded, never thrown. Throws std::invalid_argument for a
/// full-variant graph.
DegreeClassReport degree_class_report(const CleanGraph& g);

}  // namespace clean_sombor
