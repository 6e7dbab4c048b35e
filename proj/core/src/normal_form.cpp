#include "pdnf/normal_form.hpp"

#include <string>

#include "pdnf/chevalley.hpp"
#include "pdnf/error.hpp"
#include "pdnf/homological.hpp"

namespace pdnf {
namespace {

// V_m = Ker (+) Complement, with the change-of-basis inverse used to split
// any vector into its two components.
struct Splitting {
  std::vector<std::vector<Rational>> kernel;
  std::vector<std::vector<Rational>> complement;
  Matrix to_split;  // inverse of [kernel | complement]

  // Coordinates on [kernel | complement].
  std::vector<Rational> split(const std::vector<Rational>& v) const { return to_split * v; }

  std::vector<Rational> kernel_part(const std::vector<Rational>& c) const {
    std::vector<Rational> out(to_split.rows());
    for (std::size_t j = 0; j < kernel.size(); ++j)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[j] * kernel[j][i];
    return out;
  }

  std::vector<Rational> complement_part(const std::vector<Rational>& c) const {
    std::vector<Rational> out(to_split.rows());
    for (std::size_t j = 0; j < complement.size(); ++j)
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += c[kernel.size() + j] * complement[j][i];
    return out;
  }
};

Splitting make_splitting(std::vector<std::vector<Rational>> kernel, std::vector<std::vector<Rational>> complement,
                         std::size_t dim) {
  Splitting s{std::move(kernel), std::move(complement), {}};
  std::vector<std::vector<Rational>> cols = s.kernel;
  cols.insert(cols.end(), s.complement.begin(), s.complement.end());
  if (cols.size() != dim) throw InvariantError("kernel and complement do not split V_m");
  if (dim == 0) return s;
  auto inv = inverse(Matrix::from_columns(cols, dim));
  if (!inv) throw InvariantError("kernel and complement are not independent");
  s.to_split = std::move(*inv);
  return s;
}

std::vector<Rational> difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<Polynomial> step_map(const std::vector<Polynomial>& h) {
  std::vector<Polynomial> phi = identity_map(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) phi[i] += h[i];
  return phi;
}

void require_linear_part(const Matrix& a, const char* who) {
  if (a.is_zero())
    throw DegenerateLinearPartError(std::string(who) + ": the linear part vanishes; normal forms need a nonzero linear part");
}

struct Prepared {
  Matrix a, as;
};

Prepared prepare(const VectorField& f, const char* who) {
  Matrix a = f.linear_part();
  require_linear_part(a, who);
  return {a, sn_decompose(a).semisimple};
}

StepOutput step_impl(const VectorField& field, unsigned m, const Prepared& p) {
  const std::size_t n = field.dimension();
  GradedBasis basis(n, m);
  ResonantSubspace rs = resonant_subspace(p.as, m);
  Splitting sp = make_splitting(std::move(rs.kernel), std::move(rs.image), basis.size());

  auto fm = basis.coordinates(field.homogeneous_part(m));
  auto c = sp.split(fm);
  auto r = sp.kernel_part(c);
  auto rhs = difference(fm, r);

  Matrix ad = ad_matrix(p.a, m);
  LinearSolution sol = solve_linear(ad, rhs);
  if (!sol.feasible) throw InvariantError("homological equation unsolvable at degree " + std::to_string(m));
  auto h = sp.complement_part(sp.split(sol.solution));

  StepOutput out;
  out.step.degree = m;
  out.step.generator = basis.field(h);
  out.step.kernel_basis = sp.kernel;
  out.step.remainder.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(sp.kernel.size()));
  out.step.solution_dimension = sol.nullity;

  bool trivial = true;
  for (const auto& g : out.step.generator) trivial = trivial && g.is_zero();
  out.updated = trivial ? field : pushforward(field, step_map(out.step.generator), field.truncation());
  if (basis.coordinates(out.updated.homogeneous_part(m)) != r)
    throw InvariantError("normalization step left a non-resonant term at degree " + std::to_string(m));
  return out;
}

// Rebuilds the stored map from psi (normalized -> original).
NearIdentityMap from_psi(std::vector<Polynomial> psi, unsigned k) {
  return NearIdentityMap::from_forward(std::move(psi), k).inverted();
}

}  // namespace

VectorField NormalFormResult::reconstruct_original() const {
  return pushforward(normalized, transformation.forward(), degree);
}

StepOutput normalize_step(const VectorField& field, unsigned m) {
  if (m < 2) throw PreconditionError("normalize_step: degree must be >= 2");
  if (m > field.truncation()) throw PreconditionError("normalize_step: degree exceeds the field truncation");
  return step_impl(field, m, prepare(field, "normalize_step"));
}

NormalFormResult normal_form(const VectorField& field, unsigned k) {
  if (k < 2) throw PreconditionError("normal_form: target degree must be >= 2");
  k = std::min(k, field.truncation());
  if (k < 2) throw PreconditionError("normal_form: field truncation must be >= 2");
  Prepared p = prepare(field, "normal_form");

  NormalFormResult res;
  res.linear_part = p.a;
  res.semisimple_part = p.as;
  res.degree = k;
  VectorField cur = field.truncated(k);
  std::vector<Polynomial> psi = identity_map(field.dimension());
  for (unsigned m = 2; m <= k; ++m) {
    StepOutput s = step_impl(cur, m, p);
    bool trivial = true;
    for (const auto& g : s.step.generator) trivial = trivial && g.is_zero();
    if (!trivial) psi = compose(psi, step_map(s.step.generator), k);
    cur = std::move(s.updated);
    res.steps.push_back(std::move(s.step));
  }
  res.normalized = std::move(cur);
  res.transformation = from_psi(std::move(psi), k);
  return res;
}

JointNormalFormResult joint_normal_form(const VectorField& x, const VectorField& y, unsigned k) {
  if (x.dimension() != y.dimension()) throw DimensionError("joint_normal_form: dimension mismatch");
  if (k < 2) throw PreconditionError("joint_normal_form: target degree must be >= 2");
  k = std::min({k, x.truncation(), y.truncation()});
  if (k < 2) throw PreconditionError("joint_normal_form: field truncation must be >= 2");
  if (unsigned d = commutation_failure_degree(x, y, k))
    throw CommutationError("joint_normal_form: fields do not commute (first nonzero bracket term at degree " +
                               std::to_string(d) + ")",
                           d);
  Prepared px = prepare(x, "joint_normal_form");
  Prepared py = prepare(y, "joint_normal_form");

  const std::size_t n = x.dimension();
  JointNormalFormResult res;
  res.x.linear_part = px.a;
  res.x.semisimple_part = px.as;
  res.y.linear_part = py.a;
  res.y.semisimple_part = py.as;
  res.x.degree = res.y.degree = k;

  VectorField cx = x.truncated(k), cy = y.truncated(k);
  std::vector<Polynomial> psi = identity_map(n);
  for (unsigned m = 2; m <= k; ++m) {
    GradedBasis basis(n, m);
    Matrix ad_as = ad_matrix(px.as, m), ad_bs = ad_matrix(py.as, m);
    KernelImage joint_ker = rref_kernel_image(ad_as.vcat(ad_bs));
    KernelImage joint_im = rref_kernel_image(ad_as.hcat(ad_bs));
    Splitting sp = make_splitting(std::move(joint_ker.kernel), std::move(joint_im.image), basis.size());

    auto fm = basis.coordinates(cx.homogeneous_part(m));
    auto gm = basis.coordinates(cy.homogeneous_part(m));
    auto cf = sp.split(fm), cg = sp.split(gm);
    auto rf = sp.kernel_part(cf), rg = sp.kernel_part(cg);

    std::vector<Rational> rhs = difference(fm, rf);
    auto rhs_g = difference(gm, rg);
    rhs.insert(rhs.end(), rhs_g.begin(), rhs_g.end());
    LinearSolution sol = solve_linear(ad_matrix(px.a, m).vcat(ad_matrix(py.a, m)), rhs);
    if (!sol.feasible)
      throw InvariantError("joint homological system unsolvable at degree " + std::to_string(m));
    auto h = sp.complement_part(sp.split(sol.solution));

    DegreeStep sx, sy;
    sx.degree = sy.degree = m;
    sx.generator = sy.generator = basis.field(h);
    sx.kernel_basis = sy.kernel_basis = sp.kernel;
    sx.remainder.assign(cf.begin(), cf.begin() + static_cast<std::ptrdiff_t>(sp.kernel.size()));
    sy.remainder.assign(cg.begin(), cg.begin() + static_cast<std::ptrdiff_t>(sp.kernel.size()));
    sx.solution_dimension = sy.solution_dimension = sol.nullity;

    bool trivial = true;
    for (const auto& g : sx.generator) trivial = trivial && g.is_zero();
    if (!trivial) {
      auto phi = step_map(sx.generator);
      cx = pushforward(cx, phi, k);
      cy = pushforward(cy, phi, k);
      psi = compose(psi, phi, k);
    }
    if (basis.coordinates(cx.homogeneous_part(m)) != rf || basis.coordinates(cy.homogeneous_part(m)) != rg)
      throw InvariantError("joint normalization left a non-resonant term at degree " + std::to_string(m));
    res.x.steps.push_back(std::move(sx));
    res.y.steps.push_back(std::move(sy));
  }
  res.x.normalized = std::move(cx);
  res.y.normalized = std::move(cy);
  res.x.transformation = from_psi(std::move(psi), k);
  res.y.transformation = res.x.transformation;
  return res;
}

NormalFormResult LinearizationCertificate::as_normal_form(const VectorField& original_x) const {
  NormalFormResult r;
  r.normalized = normalized_x;
  r.transformation = transformation;
  r.linear_part = original_x.linear_part();
  r.semisimple_part = sn_decompose(r.linear_part).semisimple;
  r.degree = degree;
  return r;
}

LinearizationCertificate linearize_via_symmetry(const VectorField& x, const VectorField& y, unsigned k) {
  if (x.dimension() != y.dimension()) throw DimensionError("linearize_via_symmetry: dimension mismatch");
  if (k < 2) throw PreconditionError("linearize_via_symmetry: target degree must be >= 2");
  k = std::min({k, x.truncation(), y.truncation()});
  if (k < 2) throw PreconditionError("linearize_via_symmetry: field truncation must be >= 2");
  if (!y.linear_part().is_identity())
    throw PreconditionError("linearize_via_symmetry: the symmetry's linear part is not the identity");
  if (unsigned d = commutation_failure_degree(x, y, k))
    throw CommutationError("linearize_via_symmetry: fields do not commute (first nonzero bracket term at degree " +
                               std::to_string(d) + ")",
                           d);

  NormalFormResult ny = normal_form(y, k);
  LinearizationCertificate cert;
  cert.degree = k;
  cert.transformation = ny.transformation;
  cert.normalized_y = ny.normalized;
  cert.symmetry_is_dilation = ny.normalized == VectorField::dilation(y.dimension(), k);
  for (const auto& s : ny.steps) cert.solution_dimensions.push_back(s.solution_dimension);
  cert.normalized_x = pushforward(x.truncated(k), ny.transformation.inverse(), k);
  cert.obstruction_degree = cert.normalized_x.first_nonlinear_degree();
  cert.verdict = cert.obstruction_degree == 0 ? Verdict::linear_through_k : Verdict::obstructed;
  return cert;
}

}  // namespace pdnf
