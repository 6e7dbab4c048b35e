#include "helpers.hpp"

#include <stdexcept>

#include "pdnf/app/dsl.hpp"
#include "pdnf/app/fixtures.hpp"

namespace pdnf::test {
namespace {

std::vector<std::string> split_vars(std::string_view vars) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : vars) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Polynomial> parse_components(std::string_view vars, std::initializer_list<std::string_view> exprs) {
  const auto names = split_vars(vars);
  std::string text = "vars " + std::string(vars) + ";\n";
  auto it = exprs.begin();
  for (const auto& v : names) text += "d" + v + " = " + (it != exprs.end() ? std::string(*it++) : "0") + ";\n";
  return app::bind(app::parse_field(text)).field.components();
}

app::BoundField bound_fixture(std::string_view name) {
  const auto text = app::fixture_text(name);
  if (!text) throw std::invalid_argument("unknown fixture");
  return app::bind(app::parse_field(*text));
}

}  // namespace

VectorField field(std::string_view vars, std::initializer_list<std::string_view> rhs, unsigned k) {
  return VectorField(parse_components(vars, rhs), k);
}

std::vector<Polynomial> polys(std::string_view vars, std::initializer_list<std::string_view> exprs) {
  auto comps = parse_components(vars, exprs);
  comps.resize(exprs.size());
  return comps;
}

Polynomial poly(std::string_view vars, std::string_view expr) { return polys(vars, {expr}).front(); }

VectorField fixture_field(std::string_view name, unsigned k) {
  return VectorField(bound_fixture(name).field.components(), k);
}

VectorField fixture_symmetry(std::string_view name, std::string_view symmetry, unsigned k) {
  for (const auto& s : bound_fixture(name).symmetries)
    if (s.name == symmetry) return VectorField(s.field.components(), k);
  throw std::invalid_argument("unknown symmetry block");
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi, int max_den) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_rational(rng, lo, hi, max_den);
  return m;
}

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned min_degree, unsigned max_degree,
                             double density, int range) {
  std::bernoulli_distribution keep(density);
  Polynomial p(n);
  for (unsigned d = min_degree; d <= max_degree; ++d)
    for (const auto& m : monomials_of_degree(n, d))
      if (keep(rng)) p.add_term(m, random_rational(rng, -range, range));
  return p;
}

VectorField random_field(std::mt19937_64& rng, std::size_t n, unsigned min_degree, unsigned k, double density) {
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_polynomial(rng, n, min_degree, k, density));
  return VectorField(std::move(comps), k);
}

std::vector<Polynomial> random_near_identity(std::mt19937_64& rng, std::size_t n, unsigned max_degree,
                                             double density) {
  auto map = identity_map(n);
  for (auto& c : map) c += random_polynomial(rng, n, 2, max_degree, density, 2);
  return map;
}

}  // namespace pdnf::test
