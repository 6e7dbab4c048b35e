#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/polynomial.hpp"

namespace pdnf {

/// Polynomial vector field f^i(x) d/dx_i, known through a truncation degree.
/// Terms above the truncation degree are dropped on construction.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::vector<Polynomial> components, unsigned truncation);

  /// (A x)^i d/dx_i.
  static VectorField linear(const Matrix& a, unsigned truncation);
  /// The dilation field sum x_i d/dx_i.
  static VectorField dilation(std::size_t n, unsigned truncation);
  static VectorField zero(std::size_t n, unsigned truncation);

  std::size_t dimension() const { return comps_.size(); }
  unsigned truncation() const { return k_; }
  const std::vector<Polynomial>& components() const { return comps_; }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }

  /// (Df)(0).
  Matrix linear_part() const;
  /// Degree-m homogeneous components.
  std::vector<Polynomial> homogeneous_part(unsigned m) const;
  /// True when every component has no term of degree >= 2 (and no constant).
  bool is_linear() const;
  /// Lowest degree >= 2 carrying a nonzero term, or 0 if none.
  unsigned first_nonlinear_degree() const;
  /// Highest degree present across the components.
  unsigned degree() const;

  VectorField truncated(unsigned k) const;

  std::vector<double> evaluate(std::span<const double> x) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Rational& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
  friend VectorField operator-(VectorField a) { return a *= Rational(-1); }

  /// Exact equality of the truncated data, including the truncation degree.
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.k_ == b.k_ && a.comps_ == b.comps_;
  }
  /// Exact equality of the components only.
  bool same_components(const VectorField& o) const { return comps_ == o.comps_; }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::vector<Polynomial> comps_;
  unsigned k_ = 1;
};

/// {f,g}^i = f^j d_j g^i - g^j d_j f^i, truncated at min of the two
/// truncation degrees.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// Lowest degree at which [x, y] has a nonzero term, considering degrees up
/// to k (both fields are truncated at k first, so those degrees are exact).
/// Returns 0 when the fields commute through k.
unsigned commutation_failure_degree(const VectorField& x, const VectorField& y, unsigned k);

/// J_ij = d map_i / d x_j.
std::vector<std::vector<Polynomial>> jacobian(std::span<const Polynomial> map);

/// Near-identity polynomial coordinate change y = phi(x) with truncated inverse.
class NearIdentityMap {
 public:
  NearIdentityMap() = default;
  /// Builds the map from its forward part, computing the inverse through k.
  static NearIdentityMap from_forward(std::vector<Polynomial> forward, unsigned k);
  /// Takes both parts as given; validates the near-identity shape only.
  static NearIdentityMap from_parts(std::vector<Polynomial> forward, std::vector<Polynomial> inverse,
                                    unsigned k);
  static NearIdentityMap identity(std::size_t n, unsigned k);

  std::size_t dimension() const { return forward_.size(); }
  unsigned truncation() const { return k_; }
  const std::vector<Polynomial>& forward() const { return forward_; }
  const std::vector<Polynomial>& inverse() const { return inverse_; }

  /// The same transformation with forward and inverse exchanged.
  NearIdentityMap inverted() const;

  friend bool operator==(const NearIdentityMap&, const NearIdentityMap&) = default;

 private:
  std::vector<Polynomial> forward_;
  std::vector<Polynomial> inverse_;
  unsigned k_ = 1;
};

/// Throws PreconditionError unless map has zero constant terms and identity
/// linear part.
void require_near_identity(std::span<const Polynomial> map);

/// Series inverse psi of a near-identity map: phi(psi(y)) = y through degree k.
std::vector<Polynomial> invert_map(std::span<const Polynomial> phi, unsigned k);

/// outer(inner(x)) truncated to degree k.
std::vector<Polynomial> compose(std::span<const Polynomial> outer, std::span<const Polynomial> inner,
                                unsigned k);

/// Field given in y coordinates, expressed in x coordinates where y = phi(x):
/// f(x) = J(x)^{-1} F(phi(x)), with J^{-1} applied as a Neumann series.
VectorField pushforward(const VectorField& field, std::span<const Polynomial> phi, unsigned k);

/// Identity map components x_1, ..., x_n.
std::vector<Polynomial> identity_map(std::size_t n);

}  // namespace pdnf
