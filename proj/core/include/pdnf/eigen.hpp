#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/univariate.hpp"

namespace pdnf {

/// One eigenvalue, listed with multiplicity. Exact entries carry a value in
/// Q(i); approximate ones a floating approximation with an error bound.
struct Eigenvalue {
  bool exact = false;
  Gaussian value;                    ///< meaningful when exact
  std::complex<double> approx;       ///< always filled
  double error_bound = 0.0;          ///< residual |p(z)| of the root; 0 when exact

  double real() const { return approx.real(); }
  double imag() const { return approx.imag(); }
};

struct EigenData {
  std::vector<Eigenvalue> values;
  bool exact = true;  ///< every entry exact
  UniPoly char_poly;
  double tolerance = 0.0;
  bool within_tolerance = true;  ///< every approximate residual <= tolerance

  std::size_t size() const { return values.size(); }
};

inline constexpr double kDefaultEigenTolerance = 1e-10;

/// Exact eigenvalues when the characteristic polynomial splits over Q or
/// Q(i); otherwise numeric roots of the companion matrix, Newton-polished.
EigenData eigenvalues(const Matrix& m, double tol = kDefaultEigenTolerance);

/// Roots of a univariate polynomial, same exact/approximate policy.
std::vector<Eigenvalue> polynomial_roots(const UniPoly& p);

/// Exact eigen data from a known diagonal of rationals (convenience for tests
/// and for diagonal linear parts).
EigenData exact_spectrum(const std::vector<Gaussian>& values);

struct ConjugacyReport {
  bool passes = false;
  std::string first_failure;  ///< empty when passes
};

/// Necessary condition for two linear parts to be conjugate: equal
/// characteristic polynomials and, for each eigenvalue factor p, equal ranks
/// of p(B)^j for j = 1..n.
ConjugacyReport conjugacy_necessary_check(const Matrix& b, const Matrix& b_tilde);

}  // namespace pdnf
