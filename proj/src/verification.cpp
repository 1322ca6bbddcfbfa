#include "clean_sombor/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "clean_sombor/sombor.hpp"

namespace clean_sombor {

std::size_t resolve_max_vertices(std::optional<std::size_t> explicit_cap) {
  if (explicit_cap) return *explicit_cap;
  const char* env = std::getenv(kMaxVerticesEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxVertices;
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(env, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || env[pos] != '\0') {
    throw std::invalid_argument(std::string(kMaxVerticesEnv) + " is not a vertex count: " + env);
  }
  return static_cast<std::size_t>(value);
}

std::optional<ReferenceValue> reference_value(std::uint64_t n) {
  switch (n) {
    case 24:
      return ReferenceValue{sqrt_int(85) * Rational(16) + sqrt_int(2) * Rational(576),
                            "published two-prime example total"};
    case 30:
      return ReferenceValue{sqrt_int(2) * Rational(2606) + sqrt_int(5) * Rational(28) +
                                sqrt_int(205) * Rational(24) + sqrt_int(365) * Rational(96),
                            "published general-k example total; its text states r=8 but "
                            "substitutes r=4, and enumeration gives r=4"};
    default:
      return std::nullopt;
  }
}

VerificationReport verify_n(std::uint64_t n, std::size_t max_vertices) {
  const auto started = std::chrono::steady_clock::now();
  if (n < 3) throw std::invalid_argument("verification needs n >= 3, got " + std::to_string(n));

  const ResidueRing ring = factorize(n);
  const CleanGraph g = build_clean_graph(ring, Variant::cl2, max_vertices);
  const FormulaEvaluation formula = evaluate(ring);

  VerificationReport report;
  report.n = n;
  report.k = ring.prime_count;
  report.m = ring.two_exponent;
  report.phi = formula.formula_case.phi;
  report.r = formula.formula_case.r;
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  report.tag = formula.formula_case.tag;

  report.oracle_value = sombor_index(g);
  report.formula_value = formula.value;
  report.difference = formula.value - report.oracle_value;
  report.exact_match = report.difference.is_zero();
  report.degree_table_match = degree_class_report(g).all_match;
  if (formula.general_value) {
    report.general_value = formula.general_value;
    report.general_difference = *formula.general_value - report.oracle_value;
  }
  report.pair_coefficient_consistent = formula.pair_coefficient_consistent;

  std::size_t degree_sum = 0;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
  report.handshake_ok = degree_sum == 2 * g.edge_count();
  report.vertex_count_ok =
      g.vertex_count() == ((std::size_t{1} << ring.prime_count) - 1) * report.phi;

  report.oracle_float = sombor_index_float(g);
  report.float_relative_error = std::abs(report.oracle_value.to_double() - report.oracle_float) /
                                std::max(1.0, std::abs(report.oracle_float));
  report.reference = reference_value(n);

  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_runtime) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["m"] = report.m;
  j["phi"] = report.phi;
  j["r"] = report.r;
  j["vertex_count"] = report.vertex_count;
  j["edge_count"] = report.edge_count;
  j["case"] = std::string(to_string(report.tag));
  j["oracle_value"] = report.oracle_value.to_string();
  j["formula_value"] = report.formula_value.to_string();
  j["exact_match"] = report.exact_match;
  j["difference"] = report.difference.to_string();
  j["degree_table_match"] = report.degree_table_match;
  j["general_value"] =
      report.general_value ? ordered_json(report.general_value->to_string()) : ordered_json();
  j["general_difference"] = report.general_difference
                                ? ordered_json(report.general_difference->to_string())
                                : ordered_json();
  j["pair_coefficient_consistent"] = report.pair_coefficient_consistent;
  j["handshake_ok"] = report.handshake_ok;
  j["vertex_count_ok"] = report.vertex_count_ok;
  j["oracle_float"] = report.oracle_float;
  j["float_relative_error"] = report.float_relative_error;
  if (report.reference) {
    j["reference"] = {{"value", report.reference->value.to_string()},
                      {"matches_oracle", report.reference->value == report.oracle_value},
                      {"matches_formula", report.reference->value == report.formula_value},
                      {"note", report.reference->note}};
  } else {
    j["reference"] = nullptr;
  }
  if (include_runtime) j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os.precision(12);
  os << "Z_" << report.n << ": k=" << report.k << " m=" << report.m << " phi=" << report.phi
     << " r=" << report.r << '\n';
  os << "  Cl2: " << report.vertex_count << " vertices, " << report.edge_count << " edges\n";
  os << "  case:        " << to_string(report.tag) << '\n';
  os << "  oracle:      " << report.oracle_value.to_string() << "  (≈ " << report.oracle_float
     << ")\n";
  os << "  closed form: " << report.formula_value.to_string() << '\n';
  os << "  difference:  " << report.difference.to_string()
     << (report.exact_match ? "  [exact match]" : "  [MISMATCH]") << '\n';
  if (report.general_value && report.tag != FormulaTag::general_k) {
    os << "  general-k:   " << report.general_value->to_string() << "  (minus oracle: "
       << report.general_difference->to_string() << ")\n";
  }
  os << "  degree table: " << (report.degree_table_match ? "match" : "MISMATCH") << '\n';
  if (report.reference) {
    os << "  reference:   " << report.reference->value.to_string() << "  (oracle "
       << (report.reference->value == report.oracle_value ? "matches" : "differs") << ", formula "
       << (report.reference->value == report.formula_value ? "matches" : "differs") << "; "
       << report.reference->note << ")\n";
  }
  return os.str();
}

RangeFilter parse_filter(std::string_view text) {
  if (text == "all") return RangeFilter::all;
  if (text == "k1") return RangeFilter::k1;
  if (text == "k2") return RangeFilter::k2;
  if (text == "k3+" || text == "k>=3" || text == "k≥3") return RangeFilter::k3plus;
  throw std::invalid_argument("unknown filter: " + std::string(text));
}

std::string_view to_string(RangeFilter filter) {
  switch (filter) {
    case RangeFilter::all: return "all";
    case RangeFilter::k1: return "k1";
    case RangeFilter::k2: return "k2";
    case RangeFilter::k3plus: return "k3+";
  }
  return "unknown";
}

bool filter_accepts(RangeFilter filter, unsigned k) {
  switch (filter) {
    case RangeFilter::all: return true;
    case RangeFilter::k1: return k == 1;
    case RangeFilter::k2: return k == 2;
    case RangeFilter::k3plus: return k >= 3;
  }
  return false;
}

std::vector<VerificationReport> verify_reports(std::uint64_t lo, std::uint64_t hi,
                                               RangeFilter filter, std::size_t max_vertices,
                                               unsigned threads) {
  if (lo < 3 || lo > hi) {
    throw std::invalid_argument("range must satisfy 3 <= lo <= hi");
  }
  std::vector<std::uint64_t> targets;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const ResidueRing ring = factorize(n);
    if (!filter_accepts(filter, ring.prime_count)) continue;
    const std::size_t order = clean_graph_order(ring, Variant::cl2);
    if (order > max_vertices) throw GraphTooLarge(n, order, max_vertices);
    targets.push_back(n);
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, targets.size())));

  std::vector<VerificationReport> reports(targets.size());
  std::vector<std::exception_ptr> errors(targets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < targets.size(); i = next++) {
      try {
        reports[i] = verify_n(targets[i], max_vertices);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return reports;
}

RangeSummary summarize(const std::vector<VerificationReport>& reports, std::uint64_t lo,
                       std::uint64_t hi, RangeFilter filter) {
  RangeSummary summary;
  summary.lo = lo;
  summary.hi = hi;
  summary.filter = filter;
  for (const auto& report : reports) {
    TagCounts& counts = summary.by_tag[std::string(to_string(report.tag))];
    ++counts.rows;
    ++(report.exact_match ? counts.matches : counts.mismatches);
    ++summary.rows;
    if (report.proven_case_failed()) ++summary.proven_case_failures;
  }
  return summary;
}

nlohmann::ordered_json to_json(const RangeSummary& summary) {
  nlohmann::ordered_json by_tag = nlohmann::ordered_json::object();
  for (const auto& [tag, counts] : summary.by_tag) {
    by_tag[tag] = {{"rows", counts.rows},
                   {"matches", counts.matches},
                   {"mismatches", counts.mismatches}};
  }
  nlohmann::ordered_json body;
  body["lo"] = summary.lo;
  body["hi"] = summary.hi;
  body["filter"] = std::string(to_string(summary.filter));
  body["rows"] = summary.rows;
  body["by_case"] = std::move(by_tag);
  body["proven_case_failures"] = summary.proven_case_failures;
  return {{"summary", std::move(body)}};
}

RangeSummary verify_range(std::uint64_t lo, std::uint64_t hi, RangeFilter filter,
                          std::size_t max_vertices, std::ostream& out, unsigned threads) {
  const auto reports = verify_reports(lo, hi, filter, max_vertices, threads);
  for (const auto& report : reports) out << to_json(report).dump() << '\n';
  RangeSummary summary = summarize(reports, lo, hi, filter);
  out << to_json(summary).dump() << '\n';
  return summary;
}

}  // namespace clean_sombor
