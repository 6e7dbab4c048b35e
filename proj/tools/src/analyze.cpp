#include "pdnf/app/analyze.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "pdnf/convergence.hpp"
#include "pdnf/eigen.hpp"
#include "pdnf/homological.hpp"
#include "pdnf/normal_form.hpp"
#include "pdnf/symmetry.hpp"

namespace pdnf::app {

unsigned default_degree() {
  if (const char* env = std::getenv("PDNF_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 64) return static_cast<unsigned>(v);
  }
  return kDefaultDegree;
}

namespace {

using Names = std::vector<std::string>;

std::vector<std::string> strings(const std::vector<Polynomial>& ps, const Names& names) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(p.to_string(names));
  return out;
}

std::vector<std::vector<std::string>> strings(const Matrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(pdnf::to_string(m(r, c)));
  return out;
}

std::vector<EigenEntry> entries(const EigenData& eig) {
  std::vector<EigenEntry> out;
  for (const auto& e : eig.values)
    out.push_back({e.exact, e.exact ? pdnf::to_string(e.value) : std::string(), e.real(), e.imag(), e.error_bound});
  return out;
}

OmegaSection omega_section(const OmegaData& d) {
  OmegaSection s;
  for (const auto& e : d.table) s.rows.push_back({e.k, e.omega, e.partial_sum, e.capped});
  s.k_max = d.k_max;
  s.q_sum_cap = d.q_sum_cap;
  s.cap_truncated = d.cap_truncated;
  s.bounded = d.bounded;
  s.basis = d.basis;
  return s;
}

bool is_diagonal(const Matrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c && a(r, c) != 0) return false;
  return true;
}

// Both fields as exact polynomials: does the bracket vanish in every degree?
bool commutes_exactly(const VectorField& x, const VectorField& y) {
  const unsigned d = std::max(1u, x.degree() + y.degree());
  return commutation_failure_degree(VectorField(x.components(), d), VectorField(y.components(), d), d) == 0;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::parametrized: return "parametrized";
    case SolveStatus::obstructed: return "obstructed";
  }
  return "obstructed";
}

struct ChosenSymmetry {
  SymmetrySection section;
  std::optional<VectorField> field;  ///< unset when obstructed
};

ChosenSymmetry declared(const BoundField& bf, const NamedField& nf, const VectorField& x, unsigned k) {
  ChosenSymmetry c;
  c.section.source = "declared:" + nf.name;
  c.section.field = strings(nf.field.components(), bf.vars);
  c.section.linear_part = strings(nf.field.linear_part());
  c.section.commutes_through_k = commutation_failure_degree(x, VectorField(nf.field.components(), k), k) == 0;
  c.field = VectorField(nf.field.components(), k);
  return c;
}

ChosenSymmetry choose_symmetry(const BoundField& bf, const VectorField& x, const AnalyzeOptions& opt) {
  const unsigned k = opt.degree;
  if (opt.symmetry_name) {
    for (const auto& s : bf.symmetries)
      if (s.name == *opt.symmetry_name) return declared(bf, s, x, k);
    throw PreconditionError("no symmetry block named '" + *opt.symmetry_name + "'");
  }

  const Matrix target = opt.symmetry_target.value_or(Matrix::identity(x.dimension()));
  SymmetryResult found = find_symmetry(x, target, k);
  ChosenSymmetry c;
  c.section.source = "find_symmetry";
  c.section.field = strings(found.symmetry.components(), bf.vars);
  c.section.linear_part = strings(found.target);
  for (const auto& d : found.degrees) c.section.degrees.push_back({d.degree, status_name(d.status), d.solution_dimension});
  c.section.obstruction_degree = found.obstruction_degree;
  c.section.commutes_through_k = !found.obstructed();
  if (!found.obstructed()) c.field = found.symmetry;

  // A solver result that is only a truncated series cannot certify
  // convergence; a declared polynomial symmetry can.
  const bool usable = c.field && commutes_exactly(x, *c.field);
  if (!usable && !opt.solver_only && !bf.symmetries.empty()) {
    const auto it = std::find_if(bf.symmetries.begin(), bf.symmetries.end(),
                                 [](const NamedField& s) { return s.field.linear_part().is_identity(); });
    ChosenSymmetry d = declared(bf, it != bf.symmetries.end() ? *it : bf.symmetries.front(), x, k);
    if (d.section.commutes_through_k) return d;
  }
  return c;
}

std::vector<DegreeSummary> summaries(const NormalFormResult& nf, const Names& names) {
  std::vector<DegreeSummary> out;
  for (const auto& s : nf.steps)
    out.push_back({s.degree, s.kernel_basis.size(), s.solution_dimension, strings(s.generator, names),
                   strings(nf.normalized.homogeneous_part(s.degree), names)});
  return out;
}

NormalFormSection section_from(const NormalFormResult& nf, const std::string& method, const Names& names) {
  NormalFormSection s;
  s.method = method;
  s.degree = nf.degree;
  s.normalized = strings(nf.normalized.components(), names);
  s.linear = nf.normalized.is_linear();
  s.verdict = s.linear ? "linear_through_k" : "normal_form";
  s.degrees = summaries(nf, names);
  s.forward = strings(nf.transformation.forward(), names);
  s.inverse = strings(nf.transformation.inverse(), names);
  return s;
}

void mark_resonances(std::vector<ResonanceEntry>& res, const std::vector<ResonanceRecord>& recs, const Matrix& a,
                     const VectorField& normalized) {
  // Monomials only mean the same thing in eigen-coordinates when A is diagonal.
  if (!is_diagonal(a)) return;
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (recs[i].degree > normalized.truncation()) continue;
    const bool kept = normalized[recs[i].component].coefficient(recs[i].multi_index) != 0;
    res[i].status = kept ? "retained" : "cancelled";
  }
}

}  // namespace

AnalysisReport run_analyze(const FieldSpec& spec, const Bindings& bindings, const AnalyzeOptions& opt) {
  AnalysisReport rep;
  rep.input.source = opt.source;
  rep.input.vars = spec.vars;
  rep.input.degree = opt.degree;
  const Names& names = spec.vars;

  const BoundField bf = bind(spec, bindings);
  for (const auto& [name, value] : bf.params) rep.input.params[name] = pdnf::to_string(value);
  rep.input.field = strings(bf.field.components(), names);

  const unsigned k = opt.degree;
  const VectorField x(bf.field.components(), k);
  const Matrix a = x.linear_part();
  const Sections& sec = opt.sections;

  const EigenData eig = eigenvalues(a);
  if (sec.eigen) rep.eigenvalues = entries(eig);

  std::vector<ResonanceRecord> recs;
  if (sec.resonances) {
    recs = enumerate_resonances(eig, k);
    const bool diagonal = is_diagonal(a);
    Names eigen_names;
    for (std::size_t i = 0; i < a.rows(); ++i) eigen_names.push_back("u" + std::to_string(i + 1));
    std::vector<ResonanceEntry> res;
    for (const auto& r : recs) {
      ResonanceEntry e;
      e.multi_index.assign(r.multi_index.exponents().begin(), r.multi_index.exponents().end());
      e.component = static_cast<unsigned>(r.component + 1);
      e.degree = r.degree;
      e.exact = r.exact;
      e.monomial = Polynomial::monomial(r.multi_index, Rational(1)).to_string(diagonal ? names : eigen_names);
      e.eigen_coordinates = !diagonal;
      res.push_back(std::move(e));
    }
    rep.resonances = std::move(res);
  }
  if (sec.bruno) rep.bruno = omega_section(bruno_omega(eig));

  try {
    std::optional<ChosenSymmetry> sym;
    if (sec.symmetry) {
      sym = choose_symmetry(bf, x, opt);
      rep.symmetry = sym->section;
    }
    const bool sym_ok = sym && sym->field && sym->section.commutes_through_k;

    std::optional<NormalFormResult> nf;
    if (sec.normal_form) {
      if (sym_ok && sym->field->linear_part().is_identity()) {
        const LinearizationCertificate cert = linearize_via_symmetry(x, *sym->field, k);
        nf = cert.as_normal_form(x);
        NormalFormSection s;
        s.method = "linearize_via_symmetry";
        s.degree = cert.degree;
        s.normalized = strings(cert.normalized_x.components(), names);
        s.linear = cert.normalized_x.is_linear();
        s.verdict = cert.verdict == Verdict::linear_through_k ? "linear_through_k" : "obstructed";
        if (cert.verdict == Verdict::obstructed) s.obstruction_degree = cert.obstruction_degree;
        s.symmetry_is_dilation = cert.symmetry_is_dilation;
        for (std::size_t i = 0; i < cert.solution_dimensions.size(); ++i) {
          const auto m = static_cast<unsigned>(i + 2);
          s.degrees.push_back({m, 0, cert.solution_dimensions[i], {},
                               strings(cert.normalized_x.homogeneous_part(m), names)});
        }
        s.forward = strings(cert.transformation.forward(), names);
        s.inverse = strings(cert.transformation.inverse(), names);
        rep.normal_form = std::move(s);
      } else if (sym_ok && !sym->field->linear_part().is_zero()) {
        JointNormalFormResult joint = joint_normal_form(x, *sym->field, k);
        rep.normal_form = section_from(joint.x, "joint_normal_form", names);
        nf = std::move(joint.x);
      } else {
        nf = normal_form(x, k);
        rep.normal_form = section_from(*nf, "normal_form", names);
      }
      if (rep.resonances) mark_resonances(*rep.resonances, recs, a, nf->normalized);
    }

    if (sec.convergence) {
      std::optional<VectorField> y;
      if (sym_ok) y = sym->field;
      // The input is an exact polynomial, so keep every term even above k.
      const VectorField exact_x(bf.field.components(), std::max(k, bf.field.degree()));
      const ConvergenceReport cr = classify_convergence(exact_x, y, k);
      ConvergenceSection c;
      c.classification = to_string(cr.classification);
      c.rule = cr.rule;
      c.diagnostic_conditional = cr.diagnostic_conditional;
      c.poincare_a = cr.poincare_a;
      c.poincare_b = cr.poincare_b;
      c.resonance_bound_a = cr.resonance_bound_a;
      if (cr.eig_b) c.eigen_b = entries(*cr.eig_b);
      c.omega_a = omega_section(cr.omega_a);
      if (cr.omega_b) c.omega_b = omega_section(*cr.omega_b);
      c.symmetry_through_k = cr.symmetry_through_k;
      c.symmetry_exact = cr.symmetry_exact;
      c.ker_b_trivial = cr.ker_b_trivial;
      c.joint_kernel_trivial = cr.joint_kernel_trivial;
      c.notes = cr.notes;
      rep.convergence = std::move(c);
    }

    if (sec.flow) {
      if (!nf) nf = normal_form(x, k);
      const FlowCheckReport fr = flow_consistency_check(x, *nf, opt.flow);
      rep.flow_check = FlowSection{opt.flow.radius, opt.flow.t_end, opt.flow.tol, opt.flow.step, fr.samples,
                                   opt.flow.seed,   fr.max_deviation, fr.passed,  fr.diverged};
    }
  } catch (const InvariantError&) {
    throw;
  } catch (const PreconditionError& e) {
    rep.error = e.what();
  }
  return rep;
}

std::vector<AnalysisReport> run_grid(const FieldSpec& spec, const std::vector<Bindings>& grid,
                                     const AnalyzeOptions& opt, unsigned threads) {
  std::vector<AnalysisReport> out(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        out[i] = run_analyze(spec, grid[i], opt);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

int exit_status(const AnalysisReport& r) {
  if (r.error) return 2;
  if (r.symmetry && r.symmetry->obstruction_degree && r.symmetry->source == "find_symmetry") return 2;
  if (r.normal_form && r.normal_form->verdict == "obstructed") return 2;
  return 0;
}

}  // namespace pdnf::app
