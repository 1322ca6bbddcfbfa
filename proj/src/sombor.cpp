#include "clean_sombor/sombor.hpp"

#include <cmath>
#include <cstdint>

namespace clean_sombor {

DegreePairCounts degree_pair_counts(const SimpleGraph& g) {
  DegreePairCounts pairs;
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    const std::size_t di = g.degree(i);
    for (VertexIndex j : g.neighbors(i)) {
      if (j <= i) continue;
      const std::size_t dj = g.degree(j);
      ++pairs[{std::min(di, dj), std::max(di, dj)}];
    }
  }
  return pairs;
}

RadicalSum sombor_index(const DegreePairCounts& pairs) {
  RadicalSum total;
  for (const auto& [degrees, count] : pairs) {
    const auto [a, b] = degrees;
    const std::uint64_t radicand = std::uint64_t{a} * a + std::uint64_t{b} * b;
    total += RadicalSum::term(Rational(BigInt(count)), radicand);
  }
  return total;
}

RadicalSum sombor_index(const SimpleGraph& g) { return sombor_index(degree_pair_counts(g)); }

double sombor_index_float(const SimpleGraph& g) {
  double sum = 0.0;
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    const auto di = static_cast<double>(g.degree(i));
    for (VertexIndex j : g.neighbors(i)) {
      if (j <= i) continue;
      const auto dj = static_cast<double>(g.degree(j));
      sum += std::sqrt(di * di + dj * dj);
    }
  }
  return sum;
}

}  // namespace clean_sombor
