#include "pdnf/homological.hpp"

#include <algorithm>
#include <cmath>

#include "pdnf/error.hpp"

namespace pdnf {

GradedBasis::GradedBasis(std::size_t n, unsigned m) : n_(n), m_(m), monomials_(monomials_of_degree(n, m)) {
  if (n < 1) throw PreconditionError("graded basis needs n >= 1");
}

GradedBasis::Element GradedBasis::operator[](std::size_t i) const {
  return {monomials_[i % monomials_.size()], i / monomials_.size()};
}

std::size_t GradedBasis::index_of(const Monomial& mono, std::size_t component) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), mono);
  if (it == monomials_.end() || !(*it == mono)) throw PreconditionError("monomial not in this graded basis");
  return component * monomials_.size() + static_cast<std::size_t>(it - monomials_.begin());
}

std::vector<Rational> GradedBasis::coordinates(std::span<const Polynomial> comps) const {
  if (comps.size() != n_) throw DimensionError("coordinates: component count mismatch");
  std::vector<Rational> v(size());
  for (std::size_t r = 0; r < n_; ++r)
    for (const auto& [mono, c] : comps[r].terms())
      if (mono.degree() == m_) v[index_of(mono, r)] = c;
  return v;
}

std::vector<Polynomial> GradedBasis::field(std::span<const Rational> coords) const {
  if (coords.size() != size()) throw DimensionError("field: coordinate length mismatch");
  std::vector<Polynomial> out(n_, Polynomial(n_));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    auto e = (*this)[i];
    out[e.component].add_term(e.monomial, coords[i]);
  }
  return out;
}

GradedBasis graded_basis(std::size_t n, unsigned m) { return {n, m}; }

Matrix ad_matrix(const Matrix& a, unsigned m) {
  if (!a.is_square()) throw DimensionError("ad_matrix needs a square matrix");
  const std::size_t n = a.rows();
  GradedBasis basis(n, m);
  Matrix ad(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto [mono, r] = basis[col];
    // {Ax, x^mono e_r} = e_r sum_i mono_i x^{mono - e_i} (Ax)_i - x^mono A e_r
    for (std::size_t i = 0; i < n; ++i) {
      if (mono[i] == 0) continue;
      Monomial::Exponents e(mono.exponents().begin(), mono.exponents().end());
      --e[i];
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        ++e[j];
        Monomial target(std::span<const std::uint32_t>(e.data(), e.size()));
        --e[j];
        ad(basis.index_of(target, r), col) += a(i, j) * mono[i];
      }
    }
    for (std::size_t s = 0; s < n; ++s)
      if (sgn(a(s, r)) != 0) ad(basis.index_of(mono, s), col) -= a(s, r);
  }
  return ad;
}

ResonantSubspace resonant_subspace(const Matrix& a_semisimple, unsigned m) {
  Matrix ad = ad_matrix(a_semisimple, m);
  KernelImage ki = rref_kernel_image(ad);
  ResonantSubspace out{std::move(ki.kernel), std::move(ki.image)};
  std::vector<std::vector<Rational>> all = out.kernel;
  all.insert(all.end(), out.image.begin(), out.image.end());
  if (all.size() != ad.rows() || (!all.empty() && rank(Matrix::from_columns(all, ad.rows())) != ad.rows()))
    throw InvariantError("Ker + Im does not span V_m: the input is not semisimple");
  return out;
}

std::vector<ResonanceRecord> enumerate_resonances(const EigenData& eig, unsigned max_degree) {
  std::vector<ResonanceRecord> out;
  const std::size_t n = eig.size();
  if (n == 0) return out;
  for (unsigned d = 2; d <= max_degree; ++d) {
    for (const Monomial& mono : monomials_of_degree(n, d)) {
      for (std::size_t r = 0; r < n; ++r) {
        ResonanceRecord rec;
        rec.multi_index = mono;
        rec.component = r;
        rec.degree = d;
        if (eig.exact) {
          Gaussian s;
          for (std::size_t i = 0; i < n; ++i) s += Gaussian(Rational(mono[i])) * eig.values[i].value;
          s -= eig.values[r].value;
          if (!s.is_zero()) continue;
          rec.exact = true;
          rec.residual = s;
        } else {
          std::complex<double> s = 0;
          for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(mono[i]) * eig.values[i].approx;
          s -= eig.values[r].approx;
          if (std::abs(s) > kResonanceTolerance) continue;
          rec.exact = false;
          rec.approx_residual = std::abs(s);
        }
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

}  // namespace pdnf
