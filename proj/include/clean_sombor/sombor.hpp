#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "clean_sombor/clean_graph.hpp"
#include "clean_sombor/radical_sum.hpp"

namespace clean_sombor {

/// Number of edges per unordered degree pair (low, high).
using DegreePairCounts = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

DegreePairCounts degree_pair_counts(const SimpleGraph& g);

/// Exact Sombor index: sum over edges of sqrt(deg(a)^2 + deg(b)^2), each
/// edge counted once. Zero for an edgeless graph.
RadicalSum sombor_index(const SimpleGraph& g);
inline RadicalSum sombor_index(const CleanGraph& g) { return sombor_index(g.graph()); }

/// Exact Sombor sum for a degree-annotated edge multiset.
RadicalSum sombor_index(const DegreePairCounts& pairs);

/// Floating-point edge sum, independent of the exact path.
double sombor_index_float(const SimpleGraph& g);
inline double sombor_index_float(const CleanGraph& g) { return sombor_index_float(g.graph()); }

}  // namespace clean_sombor
