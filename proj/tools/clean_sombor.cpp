// clean-sombor: build clean graphs of Z_n, compute their Sombor index exactly
// and compare it with the closed-form expressions.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "clean_sombor/clean_graph.hpp"
#include "clean_sombor/closed_form.hpp"
#include "clean_sombor/graph_export.hpp"
#include "clean_sombor/ring_arith.hpp"
#include "clean_sombor/verification.hpp"

namespace {

using namespace clean_sombor;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitProvenMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + out_path);
  file << text;
  if (!file.flush()) throw UsageError("failed writing output file: " + out_path);
}

std::size_t cap_from(const std::optional<std::size_t>& flag) { return resolve_max_vertices(flag); }

Variant parse_variant(const std::string& s) { return s == "full" ? Variant::full : Variant::cl2; }

int run_analyze(std::uint64_t n, const std::string& format, const std::string& out,
                const std::optional<std::size_t>& cap) {
  const VerificationReport report = verify_n(n, cap_from(cap));
  emit(out, format == "json" ? to_json(report).dump(2) + "\n" : render_text(report));
  return report.proven_case_failed() ? kExitProvenMismatch : kExitOk;
}

int run_verify_range(std::uint64_t lo, std::uint64_t hi, const std::string& filter_text,
                     const std::string& out, unsigned threads,
                     const std::optional<std::size_t>& cap) {
  const RangeFilter filter = parse_filter(filter_text);
  std::ostringstream buffer;
  const RangeSummary summary = verify_range(lo, hi, filter, cap_from(cap), buffer, threads);
  emit(out, buffer.str());

  std::cerr << "verify-range " << lo << ".." << hi << " filter=" << to_string(filter) << ": "
            << summary.rows << " rows";
  for (const auto& [tag, counts] : summary.by_tag) {
    std::cerr << "; " << tag << " " << counts.matches << " match / " << counts.mismatches
              << " mismatch";
  }
  std::cerr << '\n';
  return summary.proven_case_failures > 0 ? kExitProvenMismatch : kExitOk;
}

int run_export(std::uint64_t n, const std::string& format, const std::string& variant,
               const std::string& out, const std::optional<std::size_t>& cap) {
  const CleanGraph g = build_clean_graph(factorize(n), parse_variant(variant), cap_from(cap));
  emit(out, format == "json" ? to_json(g).dump() + "\n" : to_dot(g));
  return kExitOk;
}

int run_formula(std::uint64_t n, const std::string& format, const std::string& out) {
  const FormulaEvaluation eval = evaluate(factorize(n));
  const FormulaCase& c = eval.formula_case;
  std::string text;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["case"] = std::string(to_string(c.tag));
    j["k"] = c.k;
    j["phi"] = c.phi;
    j["r"] = c.r;
    j["value"] = eval.value.to_string();
    j["value_float"] = eval.value.to_double();
    j["general_value"] = eval.general_value ? nlohmann::ordered_json(eval.general_value->to_string())
                                            : nlohmann::ordered_json();
    j["pair_coefficient_consistent"] = eval.pair_coefficient_consistent;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os.precision(12);
    os << eval.value.to_string() << " (≈ " << eval.value.to_double() << ")\n";
    os << "  case: " << to_string(c.tag) << ", k=" << c.k << ", phi=" << c.phi << ", r=" << c.r
       << '\n';
    if (eval.general_value && c.tag != FormulaTag::general_k) {
      os << "  general-k expression: " << eval.general_value->to_string() << '\n';
    }
    if (!eval.pair_coefficient_consistent) {
      os << "  warning: literal and derived pair-class coefficients differ\n";
    }
    text = os.str();
  }
  emit(out, text);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clean graphs of Z_n and their Sombor index"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_vertices;
  std::string out;
  std::uint64_t n = 0;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", max_vertices,
                    "vertex cap (default 20000, or $CLEAN_SOMBOR_MAX_VERTICES)");
  };

  std::string analyze_format = "text";
  auto* analyze = app.add_subcommand("analyze", "oracle vs closed form for one n");
  analyze->add_option("n", n, "modulus")->required();
  analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--out", out, "output file");
  add_cap(analyze);

  std::uint64_t lo = 0, hi = 0;
  std::string filter = "all";
  unsigned threads = 0;
  auto* range = app.add_subcommand("verify-range", "JSON-lines reports for lo..hi");
  range->add_option("lo", lo)->required();
  range->add_option("hi", hi)->required();
  range->add_option("--filter", filter, "all | k1 | k2 | k3+");
  range->add_option("--out", out, "output file");
  range->add_option("--threads", threads, "worker threads (0 = all cores)");
  add_cap(range);

  std::string export_format = "dot", variant = "cl2";
  auto* exporter = app.add_subcommand("export", "write the graph as DOT or JSON");
  exporter->add_option("n", n, "modulus")->required();
  exporter->add_option("--format", export_format)->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--variant", variant)->check(CLI::IsMember({"full", "cl2"}));
  exporter->add_option("--out", out, "output file");
  add_cap(exporter);

  std::string formula_format = "text";
  auto* formula = app.add_subcommand("formula", "closed-form value only");
  formula->add_option("n", n, "modulus")->required();
  formula->add_option("--format", formula_format)->check(CLI::IsMember({"text", "json"}));
  formula->add_option("--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(n, analyze_format, out, max_vertices);
    if (*range) return run_verify_range(lo, hi, filter, out, threads, max_vertices);
    if (*exporter) return run_export(n, export_format, variant, out, max_vertices);
    if (*formula) return run_formula(n, formula_format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
