#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "pdnf/matrix.hpp"
#include "pdnf/scalar.hpp"

namespace pdnf {

/// Dense univariate polynomial over Q, coefficients stored low to high with
/// no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// t - r
  static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;

  Rational operator()(const Rational& t) const;
  Gaussian operator()(const Gaussian& t) const;
  std::complex<long double> operator()(std::complex<long double> t) const;
  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& m) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);
/// Yun's algorithm: factors s_1, s_2, ... with p = lc * prod s_i^i, each s_i
/// squarefree and pairwise coprime. Entry i-1 holds s_i (possibly 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// det(tI - M), monic of degree n (Faddeev-LeVerrier).
UniPoly char_poly(const Matrix& m);

}  // namespace pdnf
