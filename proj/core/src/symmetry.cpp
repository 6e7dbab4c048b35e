#include "pdnf/symmetry.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "pdnf/error.hpp"
#include "pdnf/homological.hpp"

namespace pdnf {

SymmetryResult find_symmetry(const VectorField& x, const Matrix& b, unsigned k) {
  const std::size_t n = x.dimension();
  if (!b.is_square() || b.rows() != n) throw DimensionError("find_symmetry: target matrix has the wrong size");
  const Matrix a = x.linear_part();
  if (!commutator(a, b).is_zero())
    throw CommutationError("find_symmetry: the target linear part does not commute with the linear part of the field", 1);
  k = std::max(1u, std::min(k, x.truncation()));

  SymmetryResult res;
  res.target = b;
  res.degree = k;
  const VectorField xk = x.truncated(k);
  VectorField y = VectorField::linear(b, k);
  for (unsigned m = 2; m <= k; ++m) {
    // Degree-m part of [x, y] with G_m still zero: everything except ad_A G_m.
    GradedBasis basis(n, m);
    auto known = basis.coordinates(lie_bracket(xk, y).homogeneous_part(m));
    for (auto& c : known) c = -c;
    LinearSolution sol = solve_linear(ad_matrix(a, m), known);
    if (!sol.feasible) {
      res.degrees.push_back({m, SolveStatus::obstructed, 0});
      res.obstruction_degree = m;
      res.symmetry = y.truncated(m - 1);
      return res;
    }
    res.degrees.push_back({m, sol.nullity == 0 ? SolveStatus::unique : SolveStatus::parametrized, sol.nullity});
    auto gm = basis.field(sol.solution);
    std::vector<Polynomial> comps = y.components();
    for (std::size_t i = 0; i < n; ++i) comps[i] += gm[i];
    y = VectorField(std::move(comps), k);
  }
  res.symmetry = std::move(y);
  return res;
}

std::vector<VectorField> power_symmetries(const Matrix& a, unsigned max_power, unsigned truncation) {
  if (!a.is_square()) throw DimensionError("power_symmetries needs a square matrix");
  std::vector<VectorField> out;
  Matrix p = Matrix::identity(a.rows());
  for (unsigned j = 0; j <= max_power; ++j) {
    out.push_back(VectorField::linear(p, truncation));
    p = p * a;
  }
  return out;
}

namespace {

// Flattens a field into coefficients indexed by (component, monomial).
using Key = std::pair<std::size_t, Monomial>;

void collect_keys(const VectorField& f, std::map<Key, std::size_t>& keys) {
  for (std::size_t i = 0; i < f.dimension(); ++i)
    for (const auto& [mono, c] : f[i].terms()) keys.emplace(Key{i, mono}, 0);
}

std::vector<Rational> flatten(const VectorField& f, const std::map<Key, std::size_t>& keys) {
  std::vector<Rational> v(keys.size());
  for (std::size_t i = 0; i < f.dimension(); ++i)
    for (const auto& [mono, c] : f[i].terms()) v[keys.at(Key{i, mono})] = c;
  return v;
}

}  // namespace

CommutatorReport commutator_report(const std::vector<VectorField>& fields) {
  CommutatorReport rep;
  if (fields.empty()) return rep;
  const std::size_t n = fields.front().dimension();
  rep.truncation = fields.front().truncation();
  for (const auto& f : fields) {
    if (f.dimension() != n) throw DimensionError("commutator_report: dimension mismatch");
    rep.truncation = std::min(rep.truncation, f.truncation());
  }
  std::vector<VectorField> fs;
  for (const auto& f : fields) fs.push_back(f.truncated(rep.truncation));

  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      BracketEntry e;
      e.i = i;
      e.j = j;
      e.bracket = lie_bracket(fs[i], fs[j]);
      e.vanishes = e.bracket.same_components(VectorField::zero(n, rep.truncation));
      e.linear_part = e.bracket.linear_part();
      e.expected_linear_part = commutator(fs[j].linear_part(), fs[i].linear_part());
      e.linear_identity_holds = e.linear_part == e.expected_linear_part;
      rep.linear_identity_holds = rep.linear_identity_holds && e.linear_identity_holds;
      rep.pairs.push_back(std::move(e));
    }

  std::map<Key, std::size_t> keys;
  for (const auto& f : fs) collect_keys(f, keys);
  for (const auto& p : rep.pairs) collect_keys(p.bracket, keys);
  std::size_t idx = 0;
  for (auto& [key, pos] : keys) pos = idx++;
  if (keys.empty()) return rep;
  std::vector<std::vector<Rational>> cols;
  for (const auto& f : fs) cols.push_back(flatten(f, keys));
  Matrix span = Matrix::from_columns(cols, keys.size());
  for (const auto& p : rep.pairs)
    if (!p.vanishes && !solve_linear(span, flatten(p.bracket, keys)).feasible) {
      rep.closes = false;
      break;
    }
  return rep;
}

}  // namespace pdnf
