#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdnf::app {

inline constexpr int kReportSchemaVersion = 1;

// Plain data mirror of an analysis, with rationals and polynomials as strings
// so the JSON form is exact and stable. Every optional section is omitted from
// the JSON when absent.

struct InputEcho {
  std::string source;
  std::vector<std::string> vars;
  std::map<std::string, std::string> params;
  std::vector<std::string> field;
  unsigned degree = 0;
  friend bool operator==(const InputEcho&, const InputEcho&) = default;
};

struct EigenEntry {
  bool exact = false;
  std::string value;  ///< "a+bi" in exact form, empty otherwise
  double re = 0, im = 0;
  double error_bound = 0;
  friend bool operator==(const EigenEntry&, const EigenEntry&) = default;
};

struct ResonanceEntry {
  std::vector<unsigned> multi_index;
  unsigned component = 0;  ///< 1-based
  unsigned degree = 0;
  bool exact = true;
  std::string monomial;
  /// Monomial and component refer to eigen-coordinates u1..un (A not diagonal).
  bool eigen_coordinates = false;
  /// "retained" when the normalized field keeps this monomial, otherwise
  /// "cancelled"; empty when no normal form was computed.
  std::string status;
  friend bool operator==(const ResonanceEntry&, const ResonanceEntry&) = default;
};

struct DegreeSummary {
  unsigned degree = 0;
  std::size_t kernel_dimension = 0;
  std::size_t solution_dimension = 0;
  std::vector<std::string> generator;
  std::vector<std::string> remainder;
  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct NormalFormSection {
  std::string method;  ///< "linearize_via_symmetry" or "normal_form"
  unsigned degree = 0;
  std::vector<std::string> normalized;
  bool linear = false;
  std::string verdict;  ///< "linear_through_k", "obstructed" or "normal_form"
  std::optional<unsigned> obstruction_degree;
  std::optional<bool> symmetry_is_dilation;
  std::vector<DegreeSummary> degrees;
  std::vector<std::string> forward;  ///< original -> normalized
  std::vector<std::string> inverse;
  friend bool operator==(const NormalFormSection&, const NormalFormSection&) = default;
};

struct SymmetryDegree {
  unsigned degree = 0;
  std::string status;  ///< unique | parametrized | obstructed
  std::size_t dimension = 0;
  friend bool operator==(const SymmetryDegree&, const SymmetryDegree&) = default;
};

struct SymmetrySection {
  std::string source;  ///< "declared:<name>" or "find_symmetry"
  std::vector<std::string> field;
  std::vector<std::vector<std::string>> linear_part;
  std::vector<SymmetryDegree> degrees;
  std::optional<unsigned> obstruction_degree;
  bool commutes_through_k = false;
  friend bool operator==(const SymmetrySection&, const SymmetrySection&) = default;
};

struct OmegaRow {
  unsigned k = 0;
  double omega = 0;
  double partial_sum = 0;
  bool capped = false;
  friend bool operator==(const OmegaRow&, const OmegaRow&) = default;
};

struct OmegaSection {
  std::vector<OmegaRow> rows;
  unsigned k_max = 0;
  unsigned q_sum_cap = 0;
  bool cap_truncated = false;
  bool bounded = false;
  std::string basis;
  friend bool operator==(const OmegaSection&, const OmegaSection&) = default;
};

struct ConvergenceSection {
  std::string classification;
  std::string rule;
  bool diagnostic_conditional = false;
  bool poincare_a = false;
  std::optional<bool> poincare_b;
  std::optional<double> resonance_bound_a;
  std::vector<EigenEntry> eigen_b;
  OmegaSection omega_a;
  std::optional<OmegaSection> omega_b;
  bool symmetry_through_k = false;
  bool symmetry_exact = false;
  std::optional<bool> ker_b_trivial;
  std::optional<bool> joint_kernel_trivial;
  std::vector<std::string> notes;
  friend bool operator==(const ConvergenceSection&, const ConvergenceSection&) = default;
};

struct FlowSection {
  double radius = 0, t_end = 0, tol = 0, step = 0;
  unsigned samples = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0;
  bool passed = false;
  bool diverged = false;
  friend bool operator==(const FlowSection&, const FlowSection&) = default;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  InputEcho input;
  std::optional<std::string> error;
  std::optional<std::vector<EigenEntry>> eigenvalues;
  std::optional<std::vector<ResonanceEntry>> resonances;
  std::optional<SymmetrySection> symmetry;
  std::optional<NormalFormSection> normal_form;
  std::optional<ConvergenceSection> convergence;
  std::optional<OmegaSection> bruno;
  std::optional<FlowSection> flow_check;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

std::string to_json(const AnalysisReport& r, int indent = 2);
std::string to_json(const std::vector<AnalysisReport>& rs, int indent = 2);
AnalysisReport report_from_json(const std::string& text);
std::vector<AnalysisReport> reports_from_json(const std::string& text);

std::string render_text(const AnalysisReport& r);

}  // namespace pdnf::app
