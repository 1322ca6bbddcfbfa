#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "clean_sombor/clean_graph.hpp"

using namespace clean_sombor;

namespace {

CleanGraph cl2(std::uint64_t n) { return build_clean_graph(factorize(n), Variant::cl2); }

// The adjacency predicate evaluated from scratch with plain 64-bit arithmetic.
bool predicate(const CleanVertex& a, const CleanVertex& b, std::uint64_t n) {
  return (a.idempotent * b.idempotent) % n == 0 || (a.unit * b.unit) % n == 1;
}

std::vector<std::size_t> component_sizes(const CleanGraph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : connected_components(g)) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_SUITE("clean_graph") {

TEST_CASE("Z_9: two isolated vertices and two disjoint edges") {
  const CleanGraph g = cl2(9);
  REQUIRE(g.vertex_count() == 6);
  CHECK(g.edge_count() == 2);
  CHECK(g.vertex(0).unit == 1);
  CHECK(g.vertex(1).unit == 8);
  CHECK(g.degree(0) == 0);
  CHECK(g.degree(1) == 0);
  for (VertexIndex v = 2; v < 6; ++v) CHECK(g.degree(v) == 1);
  CHECK(component_sizes(g) == std::vector<std::size_t>{1, 1, 2, 2});
}

TEST_CASE("Z_24: three classes of eight") {
  const CleanGraph g = cl2(24);
  REQUIRE(g.vertex_count() == 24);
  REQUIRE(g.partition().size() == 3);
  const std::vector<Residue> units{1, 5, 7, 11, 13, 17, 19, 23};
  const std::vector<Residue> expected_e{1, 9, 16};
  unsigned block = 0;
  for (const auto& [class_index, members] : g.partition()) {
    REQUIRE(members.size() == 8);
    std::vector<Residue> seen;
    for (VertexIndex v : members) {
      CHECK(g.vertex(v).idempotent == expected_e[block]);
      CHECK(g.vertex(v).class_index == class_index);
      seen.push_back(g.vertex(v).unit);
    }
    CHECK(seen == units);
    ++block;
  }
}

TEST_CASE("Z_3: two vertices, no edges") {
  const CleanGraph g = cl2(3);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("vertex ordering: class-major, self-inverse units first") {
  const CleanGraph g = cl2(15);
  for (VertexIndex v = 1; v < g.vertex_count(); ++v) {
    const CleanVertex& a = g.vertex(v - 1);
    const CleanVertex& b = g.vertex(v);
    if (a.idempotent == b.idempotent) {
      REQUIRE(std::make_pair(!a.self_inverse, a.unit) < std::make_pair(!b.self_inverse, b.unit));
    } else {
      REQUIRE(a.idempotent < b.idempotent);
    }
  }
}

TEST_CASE("adjacency equals the definition on every pair for small n") {
  for (std::uint64_t n = 2; n <= 120; ++n) {
    for (Variant variant : {Variant::full, Variant::cl2}) {
      const CleanGraph g = build_clean_graph(factorize(n), variant);
      std::size_t degree_sum = 0;
      for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
        REQUIRE_FALSE(g.graph().adjacent(i, i));
        degree_sum += g.degree(i);
        for (VertexIndex j = i + 1; j < g.vertex_count(); ++j) {
          const bool expected = predicate(g.vertex(i), g.vertex(j), n);
          REQUIRE(g.graph().adjacent(i, j) == expected);
          REQUIRE(g.graph().adjacent(j, i) == expected);
        }
      }
      REQUIRE(degree_sum == 2 * g.edge_count());
    }
  }
}

TEST_CASE("adjacency equals the definition on random pairs of larger graphs") {
  std::mt19937_64 rng(23);
  for (std::uint64_t n : {210ULL, 462ULL, 1155ULL, 1680ULL, 1999ULL}) {
    const CleanGraph g = cl2(n);
    for (int trial = 0; trial < 20000; ++trial) {
      const auto i = static_cast<VertexIndex>(rng() % g.vertex_count());
      const auto j = static_cast<VertexIndex>(rng() % g.vertex_count());
      if (i == j) continue;
      REQUIRE(g.graph().adjacent(i, j) == predicate(g.vertex(i), g.vertex(j), n));
    }
  }
}

TEST_CASE("vertex counts of both variants") {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const ResidueRing ring = factorize(n);
    const std::size_t classes = std::size_t{1} << ring.prime_count;
    const std::size_t phi = euler_phi(ring);
    REQUIRE(build_clean_graph(ring, Variant::full).vertex_count() == classes * phi);
    REQUIRE(build_clean_graph(ring, Variant::cl2).vertex_count() == (classes - 1) * phi);
    REQUIRE(clean_graph_order(ring, Variant::cl2) == (classes - 1) * phi);
  }
}

TEST_CASE("within-class edges pair distinct mutually inverse units") {
  for (std::uint64_t n = 3; n <= 500; ++n) {
    const CleanGraph g = cl2(n);
    const auto& units = g.units();
    for (const auto& [class_index, members] : g.partition()) {
      std::size_t inside = 0;
      for (VertexIndex a : members) {
        for (VertexIndex b : members) {
          if (a >= b || !g.graph().adjacent(a, b)) continue;
          const auto& va = g.vertex(a);
          const auto& vb = g.vertex(b);
          REQUIRE(va.unit != vb.unit);
          REQUIRE((va.unit * vb.unit) % n == 1);
          ++inside;
        }
      }
      REQUIRE(inside == (units.phi - units.r) / 2);
    }
  }
}

TEST_CASE("complementary idempotent classes are completely joined") {
  for (std::uint64_t n : {6ULL, 15ULL, 24ULL, 30ULL, 100ULL, 210ULL}) {
    const CleanGraph g = cl2(n);
    const auto& ids = g.idempotent_list();
    for (const auto& [ca, ma] : g.partition()) {
      const Residue complement = (n + 1 - ids[ca]) % n;
      if (complement == 0) continue;
      const auto cb = static_cast<unsigned>(
          std::lower_bound(ids.begin(), ids.end(), complement) - ids.begin());
      for (VertexIndex a : ma) {
        for (VertexIndex b : g.partition().at(cb)) REQUIRE(g.graph().adjacent(a, b));
      }
    }
  }
}

TEST_CASE("connected components") {
  CHECK(component_sizes(cl2(9)) == std::vector<std::size_t>{1, 1, 2, 2});
  CHECK(component_sizes(cl2(16)) == std::vector<std::size_t>{1, 1, 1, 1, 2, 2});
  CHECK(connected_components(cl2(15)).size() == 1);

  const auto components = connected_components(cl2(25));
  for (std::size_t i = 1; i < components.size(); ++i) {
    CHECK(components[i - 1].front() < components[i].front());
  }
}

TEST_CASE("size cap") {
  const ResidueRing ring = factorize(2310);
  CHECK_THROWS_AS(build_clean_graph(ring, Variant::cl2, 1000), GraphTooLarge);
  try {
    build_clean_graph(ring, Variant::cl2, 1000);
  } catch (const GraphTooLarge& e) {
    CHECK(e.vertices() == 31 * 480);
    CHECK(e.cap() == 1000);
  }
  CHECK(build_clean_graph(factorize(24), Variant::cl2, 24).vertex_count() == 24);
  CHECK_THROWS_AS(build_clean_graph(factorize(24), Variant::cl2, 23), GraphTooLarge);
}

TEST_CASE("degree report: Z_24 matches the two-prime table") {
  const DegreeClassReport report = degree_class_report(cl2(24));
  CHECK(report.all_match);
  REQUIRE(report.cells.size() == 3);  // every unit is self-inverse
  CHECK(report.cells[0].observed == std::map<std::size_t, std::size_t>{{2, 8}});
  CHECK(report.cells[1].observed == std::map<std::size_t, std::size_t>{{9, 8}});
  CHECK(report.cells[2].observed == std::map<std::size_t, std::size_t>{{9, 8}});
}

TEST_CASE("degree report: Z_15") {
  const DegreeClassReport report = degree_class_report(cl2(15));
  CHECK(report.all_match);
  REQUIRE(report.cells.size() == 6);
  const std::vector<std::size_t> expected{2, 3, 9, 10, 9, 10};
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(report.cells[i].size == 4);
    CHECK(report.cells[i].observed == std::map<std::size_t, std::size_t>{{expected[i], 4}});
  }
}

TEST_CASE("degree report: Z_30 exposes extra annihilating pairs") {
  // Observed degrees frozen from the brute-force oracle script.
  const DegreeClassReport report = degree_class_report(cl2(30));
  CHECK_FALSE(report.all_match);
  std::map<Residue, std::pair<std::size_t, std::size_t>> observed;  // e -> (self-inv, other)
  for (const auto& cell : report.cells) {
    REQUIRE(cell.observed.size() == 1);
    auto& slot = observed[cell.idempotent];
    (cell.self_inverse ? slot.first : slot.second) = cell.observed.begin()->first;
    const bool should_match = cell.idempotent == 1 || cell.idempotent == 16 ||
                              cell.idempotent == 21 || cell.idempotent == 25;
    CHECK(cell.match == should_match);
  }
  CHECK(observed[1] == std::pair<std::size_t, std::size_t>{6, 7});
  for (Residue e : {6, 10, 15}) CHECK(observed[e] == std::pair<std::size_t, std::size_t>{27, 28});
  for (Residue e : {16, 21, 25}) CHECK(observed[e] == std::pair<std::size_t, std::size_t>{13, 14});
}

TEST_CASE("degree report for k = 2 up to 600") {
  for (std::uint64_t n = 6; n <= 600; ++n) {
    const ResidueRing ring = factorize(n);
    if (ring.prime_count != 2) continue;
    const DegreeClassReport report = degree_class_report(build_clean_graph(ring, Variant::cl2));
    REQUIRE(report.all_match);
    for (const auto& cell : report.cells) {
      REQUIRE(cell.size == (cell.self_inverse ? report.r : report.phi - report.r));
    }
  }
}

TEST_CASE("degree report rejects the full variant") {
  CHECK_THROWS_AS(degree_class_report(build_clean_graph(factorize(6), Variant::full)),
                  std::invalid_argument);
}

TEST_CASE("SimpleGraph construction errors") {
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 3}}), std::invalid_argument);
  const SimpleGraph g = SimpleGraph::from_edges(4, {{2, 1}, {0, 3}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

}
