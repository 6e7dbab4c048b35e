#include "pdnf/app/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "pdnf/error.hpp"

namespace pdnf::app {

using nlohmann::json;

namespace {

// JSON has no infinities; they travel as strings.
json real(double v) {
  if (std::isfinite(v)) return v;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return "nan";
}

double real(const json& j) {
  if (!j.is_string()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

template <class T>
void put(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null())
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(InputEcho, source, vars, params, field, degree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(EigenEntry, exact, value, re, im, error_bound)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ResonanceEntry, multi_index, component, degree, exact, monomial, eigen_coordinates,
                                   status)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DegreeSummary, degree, kernel_dimension, solution_dimension, generator, remainder)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SymmetryDegree, degree, status, dimension)

void to_json(json& j, const OmegaRow& r) {
  j = json{{"k", r.k}, {"omega", real(r.omega)}, {"partial_sum", real(r.partial_sum)}, {"capped", r.capped}};
}
void from_json(const json& j, OmegaRow& r) {
  r.k = j.at("k").get<unsigned>();
  r.omega = real(j.at("omega"));
  r.partial_sum = real(j.at("partial_sum"));
  r.capped = j.at("capped").get<bool>();
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(OmegaSection, rows, k_max, q_sum_cap, cap_truncated, bounded, basis)

void to_json(json& j, const FlowSection& f) {
  j = json{{"radius", f.radius},   {"t_end", f.t_end},   {"tol", f.tol},
           {"step", f.step},       {"samples", f.samples}, {"seed", f.seed},
           {"max_deviation", real(f.max_deviation)}, {"passed", f.passed}, {"diverged", f.diverged}};
}
void from_json(const json& j, FlowSection& f) {
  f.radius = j.at("radius").get<double>();
  f.t_end = j.at("t_end").get<double>();
  f.tol = j.at("tol").get<double>();
  f.step = j.at("step").get<double>();
  f.samples = j.at("samples").get<unsigned>();
  f.seed = j.at("seed").get<std::uint64_t>();
  f.max_deviation = real(j.at("max_deviation"));
  f.passed = j.at("passed").get<bool>();
  f.diverged = j.at("diverged").get<bool>();
}

void to_json(json& j, const SymmetrySection& s) {
  j = json{{"source", s.source},     {"field", s.field},
           {"linear_part", s.linear_part}, {"degrees", s.degrees},
           {"commutes_through_k", s.commutes_through_k}};
  put(j, "obstruction_degree", s.obstruction_degree);
}
void from_json(const json& j, SymmetrySection& s) {
  j.at("source").get_to(s.source);
  j.at("field").get_to(s.field);
  j.at("linear_part").get_to(s.linear_part);
  j.at("degrees").get_to(s.degrees);
  j.at("commutes_through_k").get_to(s.commutes_through_k);
  get(j, "obstruction_degree", s.obstruction_degree);
}

void to_json(json& j, const NormalFormSection& n) {
  j = json{{"method", n.method},   {"degree", n.degree},   {"normalized", n.normalized},
           {"linear", n.linear},   {"verdict", n.verdict}, {"degrees", n.degrees},
           {"forward", n.forward}, {"inverse", n.inverse}};
  put(j, "obstruction_degree", n.obstruction_degree);
  put(j, "symmetry_is_dilation", n.symmetry_is_dilation);
}
void from_json(const json& j, NormalFormSection& n) {
  j.at("method").get_to(n.method);
  j.at("degree").get_to(n.degree);
  j.at("normalized").get_to(n.normalized);
  j.at("linear").get_to(n.linear);
  j.at("verdict").get_to(n.verdict);
  j.at("degrees").get_to(n.degrees);
  j.at("forward").get_to(n.forward);
  j.at("inverse").get_to(n.inverse);
  get(j, "obstruction_degree", n.obstruction_degree);
  get(j, "symmetry_is_dilation", n.symmetry_is_dilation);
}

void to_json(json& j, const ConvergenceSection& c) {
  j = json{{"classification", c.classification},
           {"rule", c.rule},
           {"diagnostic_conditional", c.diagnostic_conditional},
           {"poincare_a", c.poincare_a},
           {"eigen_b", c.eigen_b},
           {"omega_a", c.omega_a},
           {"symmetry_through_k", c.symmetry_through_k},
           {"symmetry_exact", c.symmetry_exact},
           {"notes", c.notes}};
  put(j, "poincare_b", c.poincare_b);
  put(j, "resonance_bound_a", c.resonance_bound_a);
  put(j, "omega_b", c.omega_b);
  put(j, "ker_b_trivial", c.ker_b_trivial);
  put(j, "joint_kernel_trivial", c.joint_kernel_trivial);
}
void from_json(const json& j, ConvergenceSection& c) {
  j.at("classification").get_to(c.classification);
  j.at("rule").get_to(c.rule);
  j.at("diagnostic_conditional").get_to(c.diagnostic_conditional);
  j.at("poincare_a").get_to(c.poincare_a);
  j.at("eigen_b").get_to(c.eigen_b);
  j.at("omega_a").get_to(c.omega_a);
  j.at("symmetry_through_k").get_to(c.symmetry_through_k);
  j.at("symmetry_exact").get_to(c.symmetry_exact);
  j.at("notes").get_to(c.notes);
  get(j, "poincare_b", c.poincare_b);
  get(j, "resonance_bound_a", c.resonance_bound_a);
  get(j, "omega_b", c.omega_b);
  get(j, "ker_b_trivial", c.ker_b_trivial);
  get(j, "joint_kernel_trivial", c.joint_kernel_trivial);
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"schema_version", r.schema_version}, {"input", r.input}};
  put(j, "error", r.error);
  put(j, "eigenvalues", r.eigenvalues);
  put(j, "resonances", r.resonances);
  put(j, "symmetry", r.symmetry);
  put(j, "normal_form", r.normal_form);
  put(j, "convergence", r.convergence);
  put(j, "bruno", r.bruno);
  put(j, "flow_check", r.flow_check);
}
void from_json(const json& j, AnalysisReport& r) {
  j.at("schema_version").get_to(r.schema_version);
  if (r.schema_version != kReportSchemaVersion)
    throw PreconditionError("unsupported report schema version " + std::to_string(r.schema_version));
  j.at("input").get_to(r.input);
  get(j, "error", r.error);
  get(j, "eigenvalues", r.eigenvalues);
  get(j, "resonances", r.resonances);
  get(j, "symmetry", r.symmetry);
  get(j, "normal_form", r.normal_form);
  get(j, "convergence", r.convergence);
  get(j, "bruno", r.bruno);
  get(j, "flow_check", r.flow_check);
}

std::string to_json(const AnalysisReport& r, int indent) {
  json j;
  to_json(j, r);
  return j.dump(indent);
}

std::string to_json(const std::vector<AnalysisReport>& rs, int indent) {
  json j = json::array();
  for (const auto& r : rs) to_json(j.emplace_back(), r);
  return j.dump(indent);
}

AnalysisReport report_from_json(const std::string& text) {
  try {
    AnalysisReport r;
    from_json(json::parse(text), r);
    return r;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed report: ") + e.what());
  }
}

std::vector<AnalysisReport> reports_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    std::vector<AnalysisReport> out;
    for (const json& e : j.is_array() ? j : json::array({j})) from_json(e, out.emplace_back());
    return out;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

void field_lines(std::ostream& os, const std::vector<std::string>& vars, const std::vector<std::string>& comps,
                 const char* indent) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    os << indent << "d" << (i < vars.size() ? vars[i] : std::to_string(i + 1)) << " = " << comps[i] << "\n";
}

std::string eigen_text(const EigenEntry& e) {
  if (e.exact) return e.value;
  std::ostringstream os;
  os.precision(12);
  os << e.re;
  if (e.im != 0) os << (e.im > 0 ? "+" : "") << e.im << "i";
  os << " (approx, residual " << e.error_bound << ")";
  return os.str();
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  const auto& in = r.input;
  os << "pdnf analysis (schema " << r.schema_version << ")\n";
  os << "input: " << (in.source.empty() ? "<inline>" : in.source) << ", vars " << join(in.vars, ", ");
  if (in.degree) os << ", degree " << in.degree;
  os << "\n";
  for (const auto& [k, v] : in.params) os << "  param " << k << " = " << v << "\n";
  field_lines(os, in.vars, in.field, "  ");
  if (r.error) os << "error: " << *r.error << "\n";

  if (r.eigenvalues) {
    std::vector<std::string> ev;
    for (const auto& e : *r.eigenvalues) ev.push_back(eigen_text(e));
    os << "eigenvalues: " << join(ev, ", ") << "\n";
  }
  if (r.resonances) {
    os << "resonances through degree " << in.degree << ":" << (r.resonances->empty() ? " none" : "") << "\n";
    for (const auto& res : *r.resonances) {
      os << "  " << res.monomial << " in component " << res.component << " (d";
      if (res.eigen_coordinates)
        os << "u" << res.component << ", eigen-coordinates)";
      else
        os << (res.component - 1 < in.vars.size() ? in.vars[res.component - 1] : "?") << ")";
      if (!res.exact) os << " [approximate]";
      if (!res.status.empty()) os << ": " << res.status;
      os << "\n";
    }
  }
  if (r.symmetry) {
    const auto& s = *r.symmetry;
    os << "symmetry (" << s.source << "):\n";
    field_lines(os, in.vars, s.field, "  ");
    for (const auto& d : s.degrees) {
      os << "  degree " << d.degree << ": " << d.status;
      if (d.status == "parametrized") os << " (" << d.dimension << "-dimensional family, free part zeroed)";
      os << "\n";
    }
    if (s.obstruction_degree) os << "  obstructed at degree " << *s.obstruction_degree << "\n";
    os << "  commutes through the working degree: " << (s.commutes_through_k ? "yes" : "no") << "\n";
  }
  if (r.normal_form) {
    const auto& n = *r.normal_form;
    os << "normal form (" << n.method << ", degree " << n.degree << "): ";
    if (n.verdict == "linear_through_k")
      os << "linear through degree " << n.degree;
    else if (n.verdict == "obstructed")
      os << "obstructed at degree " << n.obstruction_degree.value_or(0);
    else
      os << (n.linear ? "linear" : "nonlinear normal form");
    os << "\n";
    field_lines(os, in.vars, n.normalized, "  ");
    if (n.symmetry_is_dilation) os << "  symmetry mapped to the dilation field: " << (*n.symmetry_is_dilation ? "yes" : "no") << "\n";
    os << "  transformation (original -> normalized):\n";
    for (std::size_t i = 0; i < n.forward.size(); ++i)
      os << "    u" << (i + 1) << " = " << n.forward[i] << "\n";
  }
  if (r.convergence) {
    const auto& c = *r.convergence;
    os << "convergence: " << c.classification << "\n  rule: " << c.rule << "\n";
    if (c.diagnostic_conditional) os << "  (conditional on the finite omega diagnostic)\n";
    os << "  Poincare domain (A): " << (c.poincare_a ? "yes" : "no");
    if (c.resonance_bound_a) os << ", resonance degree bound " << *c.resonance_bound_a;
    os << "\n";
    if (!c.omega_a.rows.empty())
      os << "  omega(A): k_max " << c.omega_a.k_max << ", partial sum " << c.omega_a.rows.back().partial_sum
         << (c.omega_a.bounded ? ", bounded" : ", not bounded") << "\n";
    for (const auto& note : c.notes) os << "  note: " << note << "\n";
  }
  if (r.bruno) {
    os << "condition omega (k_max " << r.bruno->k_max << ", sum cap " << r.bruno->q_sum_cap << "):\n";
    for (const auto& row : r.bruno->rows)
      os << "  k = " << row.k << ": omega = " << row.omega << ", partial sum = " << row.partial_sum
         << (row.capped ? " (capped)" : "") << "\n";
    os << "  " << (r.bruno->bounded ? "bounded" : "not bounded") << ": " << r.bruno->basis << "\n";
  }
  if (r.flow_check) {
    const auto& f = *r.flow_check;
    os << "flow check: " << (f.passed ? "pass" : "fail") << ", max deviation " << f.max_deviation << " (radius "
       << f.radius << ", t_end " << f.t_end << ", tol " << f.tol << ")\n";
  }
  return os.str();
}

}  // namespace pdnf::app
