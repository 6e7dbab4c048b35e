#include "pdnf/matrix.hpp"

#include <sstream>

#include "pdnf/error.hpp"

namespace pdnf {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(std::span<const std::vector<Rational>> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (sgn(v) != 0) return false;
  return true;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(rows_); }

bool Matrix::is_diagonal() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::pow(unsigned e) const {
  if (!is_square()) throw DimensionError("power of a non-square matrix");
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (o.rows_ != rows_) throw DimensionError("hcat row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m(r, cols_ + c) = o(r, c);
  }
  return m;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (o.cols_ != cols_) throw DimensionError("vcat column mismatch");
  Matrix m(rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& v : data_) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

std::vector<Rational> operator*(const Matrix& a, std::span<const Rational> v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<Rational> out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (sgn(a(i, j)) != 0 && sgn(v[j]) != 0) out[i] += a(i, j) * v[j];
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// In-place RREF; pivots are searched only in columns [0, pivot_cols).
std::vector<std::size_t> reduce(Matrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) {
        m(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j : nz) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  out.pivots = reduce(out.reduced, m.cols());
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

KernelImage rref_kernel_image(const Matrix& m) {
  Rref r = rref(m);
  KernelImage out;
  out.rank = r.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  for (std::size_t p : r.pivots) out.image.push_back(m.column(p));
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

LinearSolution solve_linear(const Matrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  const std::size_t rows = m.rows(), cols = m.cols();
  Matrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
    aug(i, cols) = rhs[i];
  }
  auto pivots = reduce(aug, cols + 1);
  LinearSolution out;
  bool inconsistent = !pivots.empty() && pivots.back() == cols;
  if (!inconsistent) {
    out.feasible = true;
    out.solution.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) out.solution[pivots[i]] = aug(i, cols);
    out.nullity = cols - pivots.size();
    return out;
  }
  // Redo the elimination while tracking row operations to extract a witness.
  Matrix tracked(rows, cols + 1 + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) tracked(i, j) = m(i, j);
    tracked(i, cols) = rhs[i];
    tracked(i, cols + 1 + i) = 1;
  }
  auto tp = reduce(tracked, cols + 1);
  std::size_t row = tp.size() - 1;
  out.witness.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) out.witness[i] = tracked(row, cols + 1 + i);
  out.nullity = cols - (tp.size() - 1);
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug = m.hcat(Matrix::identity(n));
  auto pivots = reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace pdnf
