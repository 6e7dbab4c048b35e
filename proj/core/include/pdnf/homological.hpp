#pragma once

#include <cstddef>
#include <vector>

#include "pdnf/eigen.hpp"
#include "pdnf/matrix.hpp"
#include "pdnf/polynomial.hpp"
#include "pdnf/vector_field.hpp"

namespace pdnf {

/// Basis of V_m, the homogeneous degree-m polynomial vector fields in n
/// variables. Element (monomial, component) stands for x^monomial e_component.
/// Ordering is component-major, then graded-lex over the monomials.
class GradedBasis {
 public:
  struct Element {
    Monomial monomial;
    std::size_t component;
  };

  GradedBasis(std::size_t n, unsigned m);

  std::size_t dimension() const { return n_; }
  unsigned degree() const { return m_; }
  std::size_t size() const { return n_ * monomials_.size(); }
  Element operator[](std::size_t i) const;
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Position of x^mono e_component.
  std::size_t index_of(const Monomial& mono, std::size_t component) const;

  /// Coordinates of the degree-m part of the given components.
  std::vector<Rational> coordinates(std::span<const Polynomial> comps) const;
  /// Inverse of coordinates(): n homogeneous polynomials.
  std::vector<Polynomial> field(std::span<const Rational> coords) const;

 private:
  std::size_t n_;
  unsigned m_;
  std::vector<Monomial> monomials_;
};

GradedBasis graded_basis(std::size_t n, unsigned m);

/// Matrix of h -> {Ax, h} on V_m in the GradedBasis ordering.
Matrix ad_matrix(const Matrix& a, unsigned m);

struct ResonantSubspace {
  std::vector<std::vector<Rational>> kernel;  ///< basis of Ker(ad_{A_s}) on V_m
  std::vector<std::vector<Rational>> image;   ///< basis of Im(ad_{A_s}) on V_m
};

/// Kernel and image of ad_{A_s} on V_m. Throws InvariantError when the two
/// do not span V_m together, which only happens for non-semisimple input.
ResonantSubspace resonant_subspace(const Matrix& a_semisimple, unsigned m);

/// One solution (m, r) of sum m_i lambda_i = lambda_r with |m| >= 2.
struct ResonanceRecord {
  Monomial multi_index;
  std::size_t component = 0;
  unsigned degree = 0;
  bool exact = true;
  Gaussian residual;              ///< exact residual (always zero when exact)
  double approx_residual = 0.0;   ///< |residual| for approximate spectra
};

inline constexpr double kResonanceTolerance = 1e-8;

/// All resonances with 2 <= |m| <= max_degree, ordered by degree, then
/// graded-lex monomial, then component. Exact spectra are compared exactly,
/// approximate ones within kResonanceTolerance.
std::vector<ResonanceRecord> enumerate_resonances(const EigenData& eig, unsigned max_degree);

}  // namespace pdnf
