#include "pdnf/vector_field.hpp"

#include <algorithm>
#include <sstream>

#include "pdnf/error.hpp"

namespace pdnf {

VectorField::VectorField(std::vector<Polynomial> components, unsigned truncation)
    : comps_(std::move(components)), k_(truncation) {
  if (k_ < 1) throw PreconditionError("truncation degree must be at least 1");
  for (auto& c : comps_) {
    if (c.dimension() != comps_.size())
      throw DimensionError("vector field component count must equal ambient dimension");
    if (c.degree() > k_) c = c.truncated(k_);
  }
}

VectorField VectorField::linear(const Matrix& a, unsigned truncation) {
  if (!a.is_square()) throw DimensionError("linear field needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<Polynomial> comps(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) comps[i].add_term(Monomial::variable(n, j), a(i, j));
  return {std::move(comps), truncation};
}

VectorField VectorField::dilation(std::size_t n, unsigned truncation) {
  return linear(Matrix::identity(n), truncation);
}

VectorField VectorField::zero(std::size_t n, unsigned truncation) {
  return {std::vector<Polynomial>(n, Polynomial(n)), truncation};
}

Matrix VectorField::linear_part() const {
  const std::size_t n = dimension();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = comps_[i].coefficient(Monomial::variable(n, j));
  return a;
}

std::vector<Polynomial> VectorField::homogeneous_part(unsigned m) const {
  std::vector<Polynomial> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.homogeneous_part(m));
  return out;
}

bool VectorField::is_linear() const {
  for (const auto& c : comps_)
    for (const auto& [m, v] : c.terms())
      if (m.degree() != 1) return false;
  return true;
}

unsigned VectorField::first_nonlinear_degree() const {
  unsigned best = 0;
  for (const auto& c : comps_)
    for (const auto& [m, v] : c.terms()) {
      unsigned d = m.degree();
      if (d >= 2) {
        if (best == 0 || d < best) best = d;
        break;
      }
    }
  return best;
}

unsigned VectorField::degree() const {
  unsigned d = 0;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

VectorField VectorField::truncated(unsigned k) const { return {comps_, std::min(k, k_)}; }

std::vector<double> VectorField::evaluate(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.evaluate(x));
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.dimension() != dimension()) throw DimensionError("vector field dimension mismatch");
  k_ = std::min(k_, o.k_);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] = (comps_[i] + o.comps_[i]).truncated(k_);
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.dimension() != dimension()) throw DimensionError("vector field dimension mismatch");
  k_ = std::min(k_, o.k_);
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] = (comps_[i] - o.comps_[i]).truncated(k_);
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : comps_) p *= c;
  return *this;
}

std::string VectorField::to_string(std::span<const std::string> names) const {
  std::vector<std::string> own;
  if (names.size() < dimension()) {
    own = default_names(dimension());
    names = own;
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    os << (i ? "; " : "") << "d" << names[i] << " = " << comps_[i].to_string(names);
  return os.str();
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dimension() != y.dimension()) throw DimensionError("lie_bracket dimension mismatch");
  const std::size_t n = x.dimension();
  const unsigned k = std::min(x.truncation(), y.truncation());
  std::vector<std::vector<Polynomial>> dx(n), dy(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      dx[i].push_back(x[i].derivative(j));
      dy[i].push_back(y[i].derivative(j));
    }
  std::vector<Polynomial> out(n, Polynomial(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out[i] += multiply(x[j], dy[i][j], k);
      out[i] -= multiply(y[j], dx[i][j], k);
    }
  return {std::move(out), k};
}

std::vector<std::vector<Polynomial>> jacobian(std::span<const Polynomial> map) {
  std::vector<std::vector<Polynomial>> j(map.size());
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t c = 0; c < map[i].dimension(); ++c) j[i].push_back(map[i].derivative(c));
  return j;
}

std::vector<Polynomial> identity_map(std::size_t n) {
  std::vector<Polynomial> id;
  id.reserve(n);
  for (std::size_t i = 0; i < n; ++i) id.push_back(Polynomial::variable(n, i));
  return id;
}

void require_near_identity(std::span<const Polynomial> map) {
  const std::size_t n = map.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial& p = map[i];
    if (p.dimension() != n) throw DimensionError("map must be square (n components in n variables)");
    if (sgn(p.coefficient(Monomial(n))) != 0)
      throw PreconditionError("near-identity map has a nonzero constant term");
    for (std::size_t j = 0; j < n; ++j) {
      Rational want = i == j ? 1 : 0;
      if (p.coefficient(Monomial::variable(n, j)) != want)
        throw PreconditionError("map linear part is not the identity");
    }
  }
}

std::vector<Polynomial> invert_map(std::span<const Polynomial> phi, unsigned k) {
  require_near_identity(phi);
  const std::size_t n = phi.size();
  std::vector<Polynomial> id = identity_map(n);
  std::vector<Polynomial> nonlinear;
  for (std::size_t i = 0; i < n; ++i) nonlinear.push_back(phi[i].truncated(k) - id[i]);
  // psi = y - N(psi); each pass fixes one more degree.
  std::vector<Polynomial> psi = id;
  for (unsigned d = 2; d <= k; ++d) {
    std::vector<Polynomial> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) next.push_back(id[i] - substitute(nonlinear[i], psi, d));
    psi = std::move(next);
  }
  return psi;
}

std::vector<Polynomial> compose(std::span<const Polynomial> outer, std::span<const Polynomial> inner,
                                unsigned k) {
  std::vector<Polynomial> out;
  out.reserve(outer.size());
  for (const auto& p : outer) out.push_back(substitute(p, inner, k));
  return out;
}

VectorField pushforward(const VectorField& field, std::span<const Polynomial> phi, unsigned k) {
  if (phi.size() != field.dimension()) throw DimensionError("pushforward dimension mismatch");
  require_near_identity(phi);
  const std::size_t n = phi.size();
  k = std::min(k, field.truncation());
  std::vector<Polynomial> g = compose(field.components(), phi, k);
  auto jac = jacobian(phi);
  for (std::size_t i = 0; i < n; ++i) jac[i][i] -= Polynomial::constant(n, Rational(1));
  // f = sum_j (-N)^j g with N = J - I of order >= 1.
  std::vector<Polynomial> f = g;
  std::vector<Polynomial> v = std::move(g);
  for (unsigned iter = 0; iter < k; ++iter) {
    std::vector<Polynomial> next(n, Polynomial(n));
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (!jac[i][j].is_zero() && !v[j].is_zero()) next[i] -= multiply(jac[i][j], v[j], k);
      any = any || !next[i].is_zero();
    }
    if (!any) break;
    for (std::size_t i = 0; i < n; ++i) f[i] += next[i];
    v = std::move(next);
  }
  return {std::move(f), k};
}

NearIdentityMap NearIdentityMap::from_forward(std::vector<Polynomial> forward, unsigned k) {
  require_near_identity(forward);
  NearIdentityMap m;
  for (auto& p : forward) p = p.truncated(k);
  m.inverse_ = invert_map(forward, k);
  m.forward_ = std::move(forward);
  m.k_ = k;
  return m;
}

NearIdentityMap NearIdentityMap::from_parts(std::vector<Polynomial> forward,
                                            std::vector<Polynomial> inverse, unsigned k) {
  require_near_identity(forward);
  require_near_identity(inverse);
  if (forward.size() != inverse.size()) throw DimensionError("forward/inverse size mismatch");
  NearIdentityMap m;
  for (auto& p : forward) p = p.truncated(k);
  for (auto& p : inverse) p = p.truncated(k);
  m.forward_ = std::move(forward);
  m.inverse_ = std::move(inverse);
  m.k_ = k;
  return m;
}

NearIdentityMap NearIdentityMap::identity(std::size_t n, unsigned k) {
  return from_parts(identity_map(n), identity_map(n), k);
}

NearIdentityMap NearIdentityMap::inverted() const {
  NearIdentityMap m = *this;
  std::swap(m.forward_, m.inverse_);
  return m;
}

unsigned commutation_failure_degree(const VectorField& x, const VectorField& y, unsigned k) {
  if (x.dimension() != y.dimension()) throw DimensionError("commutation check: dimension mismatch");
  k = std::min({k, x.truncation(), y.truncation()});
  VectorField br = lie_bracket(x.truncated(k), y.truncated(k));
  unsigned best = 0;
  for (const auto& c : br.components())
    if (!c.is_zero() && (best == 0 || c.min_degree() < best)) best = c.min_degree();
  // A constant term (degree 0) cannot arise from fields vanishing at 0, but
  // report it as degree 1 rather than "commuting".
  return best == 0 && !br.same_components(VectorField::zero(x.dimension(), k)) ? 1 : best;
}

}  // namespace pdnf
