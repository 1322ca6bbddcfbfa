#pragma once

#include <string>

#include <json.hpp>

#include "clean_sombor/clean_graph.hpp"

namespace clean_sombor {

/// Graphviz rendering: one node per vertex labelled "(e,u)", fill colour
/// index derived from the idempotent class, one line per edge (i < j).
std::string to_dot(const CleanGraph& g);

/// {n, variant, vertices: [{e, u, class, self_inverse, degree}], edges: [[i, j], ...]}
/// with i < j and edges in lexicographic order.
nlohmann::ordered_json to_json(const CleanGraph& g);

}  // namespace clean_sombor
