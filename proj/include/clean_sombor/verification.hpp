#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clean_sombor/clean_graph.hpp"
#include "clean_sombor/closed_form.hpp"
#include "clean_sombor/radical_sum.hpp"

namespace clean_sombor {

inline constexpr const char* kMaxVerticesEnv = "CLEAN_SOMBOR_MAX_VERTICES";

/// Vertex cap: the explicit value if given, else $CLEAN_SOMBOR_MAX_VERTICES,
/// else kDefaultMaxVertices. Throws std::invalid_argument on a malformed
/// environment value.
std::size_t resolve_max_vertices(std::optional<std::size_t> explicit_cap);

/// A previously published closed-form total kept as a comparison target.
struct ReferenceValue {
  RadicalSum value;
  std::string note;
};

std::optional<ReferenceValue> reference_value(std::uint64_t n);

struct VerificationReport {
  std::uint64_t n = 0;
  unsigned k = 0;
  unsigned m = 0;
  std::uint64_t phi = 0;
  std::uint64_t r = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  FormulaTag tag = FormulaTag::odd_prime_power;
  RadicalSum oracle_value;
  RadicalSum formula_value;
  RadicalSum difference;  // formula - oracle
  bool exact_match = false;
  bool degree_table_match = false;
  /// General-k expression and its offset from the oracle, for k >= 2.
  std::optional<RadicalSum> general_value;
  std::optional<RadicalSum> general_difference;
  bool pair_coefficient_consistent = true;
  bool handshake_ok = false;
  bool vertex_count_ok = false;
  double oracle_float = 0.0;       // direct floating edge sum
  double float_relative_error = 0.0;  // |to_float(oracle) - oracle_float| / max(1, |oracle_float|)
  std::optional<ReferenceValue> reference;
  double runtime_ms = 0.0;

  /// k <= 2 rows must match both the value and the degree tables.
  bool proven_case_failed() const { return k <= 2 && !(exact_match && degree_table_match); }
};

/// Builds Cl2(Z_n), runs the oracle and the closed form and compares them.
/// Throws std::invalid_argument for n < 3 and GraphTooLarge above the cap.
VerificationReport verify_n(std::uint64_t n, std::size_t max_vertices = kDefaultMaxVertices);

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_runtime = true);
std::string render_text(const VerificationReport& report);

enum class RangeFilter { all, k1, k2, k3plus };

/// Accepts all, k1, k2, k3+, k>=3 and k≥3.
RangeFilter parse_filter(std::string_view text);
std::string_view to_string(RangeFilter filter);
bool filter_accepts(RangeFilter filter, unsigned k);

struct TagCounts {
  std::size_t rows = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
};

struct RangeSummary {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  RangeFilter filter = RangeFilter::all;
  std::map<std::string, TagCounts> by_tag;
  std::size_t rows = 0;
  std::size_t proven_case_failures = 0;
};

nlohmann::ordered_json to_json(const RangeSummary& summary);

/// Verifies every n in [lo, hi] accepted by `filter`, spreading the work over
/// `threads` workers (0 = hardware concurrency). Reports come back in
/// ascending n. Throws std::invalid_argument for lo < 3 or lo > hi, and
/// GraphTooLarge (before any work) if some accepted n exceeds the cap.
std::vector<VerificationReport> verify_reports(std::uint64_t lo, std::uint64_t hi,
                                               RangeFilter filter, std::size_t max_vertices,
                                               unsigned threads = 0);

RangeSummary summarize(const std::vector<VerificationReport>& reports, std::uint64_t lo,
                       std::uint64_t hi, RangeFilter filter);

/// verify_reports() written as JSON lines, followed by one {"summary": ...} line.
RangeSummary verify_range(std::uint64_t lo, std::uint64_t hi, RangeFilter filter,
                          std::size_t max_vertices, std::ostream& out, unsigned threads = 0);

}  // namespace clean_sombor
