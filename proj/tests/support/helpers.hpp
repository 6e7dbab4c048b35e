#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pdnf/pdnf.hpp"

namespace pdnf::test {

/// Field from DSL right-hand sides over comma-separated variables, e.g.
/// field("x,y", {"x", "3*y - x^2"}, 5).
VectorField field(std::string_view vars, std::initializer_list<std::string_view> rhs, unsigned k);

/// Polynomials over the given variables.
std::vector<Polynomial> polys(std::string_view vars, std::initializer_list<std::string_view> exprs);
Polynomial poly(std::string_view vars, std::string_view expr);

/// Bound field of a bundled fixture, with truncation k.
VectorField fixture_field(std::string_view name, unsigned k);
/// Declared symmetry block of a bundled fixture, with truncation k.
VectorField fixture_symmetry(std::string_view name, std::string_view symmetry, unsigned k);

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den = 1);
Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi, int max_den = 1);
/// Homogeneous degree >= min_degree terms up to max_degree, sparse.
Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned min_degree, unsigned max_degree,
                             double density = 0.4, int range = 3);
VectorField random_field(std::mt19937_64& rng, std::size_t n, unsigned min_degree, unsigned k, double density = 0.4);
/// x + (random terms of degree 2..max_degree).
std::vector<Polynomial> random_near_identity(std::mt19937_64& rng, std::size_t n, unsigned max_degree,
                                             double density = 0.3);

}  // namespace pdnf::test
