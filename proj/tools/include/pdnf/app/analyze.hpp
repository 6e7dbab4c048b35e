#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdnf/app/dsl.hpp"
#include "pdnf/app/report.hpp"
#include "pdnf/flow_check.hpp"
#include "pdnf/matrix.hpp"

namespace pdnf::app {

/// Working degree used when none is given: PDNF_DEGREE if set and valid, else 8.
unsigned default_degree();

/// Which report sections a command fills.
struct Sections {
  bool eigen = true;
  bool resonances = true;
  bool symmetry = true;
  bool normal_form = true;
  bool convergence = true;
  bool bruno = false;
  bool flow = false;

  static Sections analyze() { return {}; }
  static Sections normalize() { return {true, true, false, true, false, false, false}; }
  static Sections symmetry_only() { return {true, false, true, false, false, false, false}; }
  static Sections bruno_only() { return {true, true, false, false, false, true, false}; }
  static Sections classify() { return {true, false, true, false, true, false, false}; }
  static Sections flowcheck() { return {true, false, true, true, false, false, true}; }
};

struct AnalyzeOptions {
  unsigned degree = default_degree();
  Sections sections;
  /// Linear part sought by find_symmetry; identity when unset.
  std::optional<Matrix> symmetry_target;
  /// Use this declared symmetry block instead of solving for one.
  std::optional<std::string> symmetry_name;
  /// Never fall back to declared symmetries.
  bool solver_only = false;
  FlowCheckOptions flow;
  std::string source;  ///< echoed in the report
};

/// Full pipeline for one parameter binding. Analysis failures that stem from
/// the input (degenerate linear part, non-commuting declared symmetry, unknown
/// parameter) land in `error`; InvariantError propagates.
AnalysisReport run_analyze(const FieldSpec& spec, const Bindings& bindings, const AnalyzeOptions& opt);

/// One report per grid point, computed concurrently, returned in grid order.
std::vector<AnalysisReport> run_grid(const FieldSpec& spec, const std::vector<Bindings>& grid,
                                     const AnalyzeOptions& opt, unsigned threads = 0);

/// 0 success, 2 when the report records an obstruction or an analysis error.
int exit_status(const AnalysisReport& r);

}  // namespace pdnf::app
