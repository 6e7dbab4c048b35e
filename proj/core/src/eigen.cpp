#include "pdnf/eigen.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "pdnf/error.hpp"

namespace pdnf {
namespace {

using cld = std::complex<long double>;

std::vector<cld> numeric_roots(const UniPoly& p) {
  const int d = p.degree();
  std::vector<cld> roots;
  if (d <= 0) return roots;
  UniPoly m = p.monic();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -m.coeff(static_cast<std::size_t>(i)).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  UniPoly dm = m.derivative();
  for (int i = 0; i < d; ++i) {
    auto ev = solver.eigenvalues()[i];
    cld z(ev.real(), ev.imag());
    for (int it = 0; it < 30; ++it) {
      cld fz = m(z), dz = dm(z);
      if (std::abs(dz) == 0.0L) break;
      cld step = fz / dz;
      z -= step;
      if (std::abs(step) <= 1e-30L * std::max<long double>(1.0L, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

// Continued-fraction convergents of x with bounded denominators.
std::vector<Rational> convergents(long double x) {
  std::vector<Rational> out;
  if (!std::isfinite(static_cast<double>(x))) return out;
  mpz_class h1 = 1, h0 = 0, k1 = 0, k0 = 1;
  long double r = x;
  for (int i = 0; i < 40; ++i) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e18L) break;
    mpz_class ai(static_cast<double>(a));
    mpz_class h2 = ai * h1 + h0;
    mpz_class k2 = ai * k1 + k0;
    if (k2 > mpz_class("1000000000000")) break;
    Rational q(h2, k2);
    q.canonicalize();
    out.push_back(q);
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double frac = r - a;
    if (frac < 1e-18L) break;
    r = 1.0L / frac;
  }
  return out;
}

bool is_rational_square(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

Eigenvalue exact_value(const Gaussian& z) {
  Eigenvalue e;
  e.exact = true;
  e.value = z;
  e.approx = z.to_complex();
  return e;
}

Eigenvalue approx_value(const UniPoly& p, cld z) {
  Eigenvalue e;
  e.exact = false;
  e.approx = {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  e.error_bound = static_cast<double>(std::abs(p(z)));
  return e;
}

// Roots of a monic quadratic t^2 + b t + c, exact when they lie in Q(i).
void quadratic_roots(const UniPoly& q, std::vector<Eigenvalue>& out) {
  const Rational b = q.coeff(1) / q.leading();
  const Rational c = q.coeff(0) / q.leading();
  const Rational disc = b * b - 4 * c;
  const Rational re = -b / 2;
  Rational root;
  if (sgn(disc) >= 0) {
    if (is_rational_square(disc, root)) {
      out.push_back(exact_value(Gaussian(re + root / 2)));
      out.push_back(exact_value(Gaussian(re - root / 2)));
      return;
    }
    long double s = std::sqrt(static_cast<long double>(disc.get_d()));
    long double r = static_cast<long double>(re.get_d());
    out.push_back(approx_value(q, cld(r + s / 2, 0)));
    out.push_back(approx_value(q, cld(r - s / 2, 0)));
    return;
  }
  Rational im2 = -disc / 4;
  if (is_rational_square(im2, root)) {
    out.push_back(exact_value(Gaussian(re, root)));
    out.push_back(exact_value(Gaussian(re, -root)));
    return;
  }
  long double s = std::sqrt(static_cast<long double>(im2.get_d()));
  long double r = static_cast<long double>(re.get_d());
  out.push_back(approx_value(q, cld(r, s)));
  out.push_back(approx_value(q, cld(r, -s)));
}

void squarefree_roots(UniPoly rem, std::vector<Eigenvalue>& out) {
  while (rem.degree() >= 1) {
    if (rem.degree() == 1) {
      out.push_back(exact_value(Gaussian(-rem.coeff(0) / rem.coeff(1))));
      return;
    }
    if (rem.degree() == 2) {
      quadratic_roots(rem, out);
      return;
    }
    if (sgn(rem.coeff(0)) == 0) {
      out.push_back(exact_value(Gaussian(Rational(0))));
      rem = divmod(rem, UniPoly::linear_root(Rational(0))).first;
      continue;
    }
    auto approx = numeric_roots(rem);
    bool split = false;
    for (const cld& z : approx) {
      if (std::fabs(z.imag()) > 1e-6L * std::max<long double>(1.0L, std::abs(z))) continue;
      for (const Rational& r : convergents(z.real())) {
        if (sgn(rem(r)) == 0) {
          out.push_back(exact_value(Gaussian(r)));
          rem = divmod(rem, UniPoly::linear_root(r)).first;
          split = true;
          break;
        }
      }
      if (split) break;
    }
    if (split) continue;
    for (const cld& z : approx) {
      if (z.imag() <= 1e-6L) continue;
      for (const Rational& s : convergents(2 * z.real())) {
        for (const Rational& p : convergents(std::norm(z))) {
          UniPoly quad({p, -s, Rational(1)});
          auto [quot, r] = divmod(rem, quad);
          if (!r.is_zero()) continue;
          quadratic_roots(quad, out);
          rem = quot;
          split = true;
          break;
        }
        if (split) break;
      }
      if (split) break;
    }
    if (split) continue;
    for (const cld& z : approx) out.push_back(approx_value(rem, z));
    return;
  }
}

}  // namespace

std::vector<Eigenvalue> polynomial_roots(const UniPoly& p) {
  std::vector<Eigenvalue> out;
  if (p.degree() <= 0) return out;
  auto parts = squarefree_decomposition(p);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Eigenvalue> roots;
    squarefree_roots(parts[i], roots);
    for (const auto& r : roots)
      for (std::size_t m = 0; m <= i; ++m) out.push_back(r);
  }
  std::stable_sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    if (a.exact && b.exact) {
      if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
      return a.value.imag() > b.value.imag();
    }
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() > b.imag();
  });
  return out;
}

EigenData eigenvalues(const Matrix& m, double tol) {
  EigenData d;
  d.char_poly = char_poly(m);
  d.values = polynomial_roots(d.char_poly);
  d.exact = std::all_of(d.values.begin(), d.values.end(), [](const Eigenvalue& e) { return e.exact; });
  d.tolerance = tol;
  d.within_tolerance = std::all_of(d.values.begin(), d.values.end(),
                                   [tol](const Eigenvalue& e) { return e.error_bound <= tol; });
  return d;
}

EigenData exact_spectrum(const std::vector<Gaussian>& values) {
  EigenData d;
  UniPoly cp = UniPoly::constant(Rational(1));
  bool real = true;
  for (const auto& v : values) {
    d.values.push_back(exact_value(v));
    if (v.is_real())
      cp = cp * UniPoly::linear_root(v.real());
    else
      real = false;
  }
  if (real) d.char_poly = cp;
  d.exact = true;
  return d;
}

ConjugacyReport conjugacy_necessary_check(const Matrix& b, const Matrix& bt) {
  ConjugacyReport rep;
  if (!b.is_square() || !bt.is_square() || b.rows() != bt.rows()) {
    rep.first_failure = "matrices differ in size";
    return rep;
  }
  const std::size_t n = b.rows();
  UniPoly cb = char_poly(b), ct = char_poly(bt);
  if (cb != ct) {
    rep.first_failure = "characteristic polynomials differ: " + cb.to_string() + " vs " + ct.to_string();
    return rep;
  }
  // One factor per rational eigenvalue, one per conjugate pair, and the
  // squarefree product of everything not split exactly.
  std::vector<UniPoly> factors;
  std::vector<std::string> labels;
  UniPoly rest = squarefree_part(cb);
  for (const auto& e : polynomial_roots(cb)) {
    if (!e.exact) continue;
    UniPoly f;
    if (e.value.is_real()) {
      f = UniPoly::linear_root(e.value.real());
    } else {
      if (sgn(e.value.imag()) < 0) continue;
      f = UniPoly({e.value.norm(), -2 * e.value.real(), Rational(1)});
    }
    if (std::find(factors.begin(), factors.end(), f) != factors.end()) continue;
    rest = divmod(rest, f).first;
    factors.push_back(f);
    labels.push_back("eigenvalue " + to_string(e.value));
  }
  if (rest.degree() > 0) {
    factors.push_back(rest);
    labels.push_back("irrational factor " + rest.to_string());
  }
  for (std::size_t f = 0; f < factors.size(); ++f) {
    Matrix pb = factors[f](b), pt = factors[f](bt);
    Matrix powb = pb, powt = pt;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t rb = rank(powb), rt = rank(powt);
      if (rb != rt) {
        rep.first_failure = labels[f] + ": rank of power " + std::to_string(j) + " differs (" +
                            std::to_string(rb) + " vs " + std::to_string(rt) + ")";
        return rep;
      }
      powb = powb * pb;
      powt = powt * pt;
    }
  }
  rep.passes = true;
  return rep;
}

}  // namespace pdnf
