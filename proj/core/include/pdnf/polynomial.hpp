#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

/// Exponent vector x_1^{m_1} ... x_n^{m_n}.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 4>;

  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::span<const std::uint32_t> exps) : exps_(exps.begin(), exps.end()) {}

  /// x_i as a monomial in n variables.
  static Monomial variable(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return {exps_.data(), exps_.size()}; }
  unsigned degree() const;

  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Graded-lex order: lower total degree first; within one degree the
  /// lexicographically larger exponent vector comes first (x^2, xy, y^2).
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  Exponents exps_;
};

/// All monomials of total degree m in n variables, in graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned m);
/// Number of monomials of total degree m in n variables, C(m+n-1, n-1).
std::size_t count_monomials(std::size_t n, unsigned m);

/// Sparse multivariate polynomial over Q. No zero coefficient is ever stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  std::size_t dimension() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const;
  /// Adds c to the coefficient of m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Highest total degree present; 0 for the zero polynomial.
  unsigned degree() const;
  /// Lowest total degree present; 0 for the zero polynomial.
  unsigned min_degree() const;

  Polynomial homogeneous_part(unsigned d) const;
  Polynomial truncated(unsigned k) const;
  Polynomial derivative(std::size_t i) const;

  double evaluate(std::span<const double> x) const;
  Rational evaluate(std::span<const Rational> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Human-readable rendering, e.g. "3*y - x^2". Variables default to x1..xn.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

/// Exact product truncated to total degree <= k.
Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned k);

enum class ArithKind { add, sub, mul, scale };

/// Uniform entry point for the four elementary operations. For `scale`, b must
/// be a constant polynomial. Every result is truncated to degree <= k.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind, unsigned k);

/// p(map_1(x), ..., map_n(x)) truncated to degree <= k. Multivariate Horner
/// scheme with degree-aware truncation of the partial results.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> map, unsigned k);

/// Default variable names x1..xn (or x,y,z for n <= 3).
std::vector<std::string> default_names(std::size_t n);

}  // namespace pdnf
