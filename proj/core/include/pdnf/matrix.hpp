#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdnf/scalar.hpp"

namespace pdnf {

/// Dense exact matrix over Q. Square instances play the role of the linear
/// parts A, B of vector fields; rectangular ones appear as homological
/// operators and stacked systems.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> d);
  /// Columns of the result are the given vectors.
  static Matrix from_columns(std::span<const std::vector<Rational>> cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> row(std::size_t r) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;

  Matrix transpose() const;
  Matrix pow(unsigned e) const;
  /// Columns of *this followed by the columns of o.
  Matrix hcat(const Matrix& o) const;
  /// Rows of *this followed by the rows of o.
  Matrix vcat(const Matrix& o) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form with leftmost-pivot selection.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct KernelImage {
  std::vector<std::vector<Rational>> kernel;  ///< one vector per free column
  std::vector<std::vector<Rational>> image;   ///< original columns at pivot positions
  std::size_t rank = 0;
};

/// Kernel basis (free column set to 1, other free columns 0) and image basis
/// (pivot columns of the input). Deterministic for a given column order.
KernelImage rref_kernel_image(const Matrix& m);

struct LinearSolution {
  bool feasible = false;
  /// Particular solution with every free variable set to zero.
  std::vector<Rational> solution;
  /// When infeasible: w with w^T M = 0 and w^T rhs != 0.
  std::vector<Rational> witness;
  /// Dimension of the solution space (number of free variables).
  std::size_t nullity = 0;
};

LinearSolution solve_linear(const Matrix& m, std::span<const Rational> rhs);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace pdnf
