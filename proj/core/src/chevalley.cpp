#include "pdnf/chevalley.hpp"

#include <bit>

#include "pdnf/error.hpp"

namespace pdnf {

SNDecomposition sn_decompose(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("sn_decompose needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {a, a};
  UniPoly q = squarefree_part(char_poly(a));
  UniPoly dq = q.derivative();
  // q(A) is nilpotent of index <= n; each Newton pass doubles the order of
  // vanishing, so ceil(log2 n) + 1 passes always suffice.
  const unsigned passes = static_cast<unsigned>(std::bit_width(n - 1)) + 1;
  Matrix s = a;
  for (unsigned it = 0; it < passes; ++it) {
    Matrix qs = q(s);
    if (qs.is_zero()) break;
    auto inv = inverse(dq(s));
    if (!inv) throw InvariantError("q'(S) singular during Chevalley iteration");
    s = s - qs * *inv;
  }
  SNDecomposition out{s, a - s};
  if (!is_valid_sn(a, out)) throw InvariantError("Chevalley iteration did not converge");
  return out;
}

bool is_valid_sn(const Matrix& a, const SNDecomposition& sn) {
  const std::size_t n = a.rows();
  if (sn.semisimple + sn.nilpotent != a) return false;
  if (!commutator(sn.semisimple, sn.nilpotent).is_zero()) return false;
  if (!sn.nilpotent.pow(static_cast<unsigned>(n)).is_zero()) return false;
  UniPoly mp = minimal_poly(sn.semisimple);
  return gcd(mp, mp.derivative()).degree() == 0;
}

UniPoly minimal_poly(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("minimal polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Columns vec(I), vec(M), vec(M^2), ... until the first linear dependence.
  std::vector<std::vector<Rational>> cols;
  Matrix p = Matrix::identity(n);
  for (std::size_t d = 0; d <= n; ++d) {
    std::vector<Rational> v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(p(i, j));
    std::vector<std::vector<Rational>> prev = cols;
    if (!prev.empty()) {
      Matrix sys = Matrix::from_columns(prev, n * n);
      LinearSolution sol = solve_linear(sys, v);
      if (sol.feasible) {
        std::vector<Rational> c(d + 1);
        for (std::size_t i = 0; i < d; ++i) c[i] = -sol.solution[i];
        c[d] = 1;
        return UniPoly(std::move(c));
      }
    } else if (n == 0) {
      return UniPoly::constant(Rational(1));
    }
    cols.push_back(std::move(v));
    p = p * m;
  }
  throw InvariantError("minimal polynomial degree exceeded n");
}

}  // namespace pdnf
