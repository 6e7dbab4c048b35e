#include "pdnf/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pdnf/chevalley.hpp"
#include "pdnf/homological.hpp"

namespace pdnf {
namespace {

int real_sign(const Eigenvalue& e) {
  if (e.exact) return sgn(e.value.real());
  if (std::fabs(e.real()) <= e.error_bound) return 0;
  return e.real() > 0 ? 1 : -1;
}

// Running minimum of |(Q, Lambda)|^2 per value of sum q_i.
struct OmegaSearch {
  const EigenData& eig;
  std::size_t n;
  int s_max;
  std::vector<std::optional<Rational>> exact_min;
  std::vector<double> approx_min;

  OmegaSearch(const EigenData& e, int smax)
      : eig(e), n(e.size()), s_max(smax), exact_min(static_cast<std::size_t>(smax) + 1),
        approx_min(static_cast<std::size_t>(smax) + 1, std::numeric_limits<double>::infinity()) {}

  // q_i = p_i - 1 with p_i >= 0; budget bounds the remaining sum of p.
  void run(std::size_t i, int budget, int qsum, const Gaussian& exact_val, std::complex<double> approx_val) {
    if (i == n) {
      if (qsum < 1 || qsum > s_max) return;
      auto s = static_cast<std::size_t>(qsum);
      if (eig.exact) {
        if (exact_val.is_zero()) return;
        Rational nrm = exact_val.norm();
        if (!exact_min[s] || nrm < *exact_min[s]) exact_min[s] = nrm;
      } else {
        double a = std::abs(approx_val);
        if (a <= 1e-12) return;
        approx_min[s] = std::min(approx_min[s], a);
      }
      return;
    }
    for (int p = 0; p <= budget; ++p) {
      const int q = p - 1;
      if (eig.exact)
        run(i + 1, budget - p, qsum + q, exact_val + Gaussian(Rational(q)) * eig.values[i].value, approx_val);
      else
        run(i + 1, budget - p, qsum + q, exact_val, approx_val + static_cast<double>(q) * eig.values[i].approx);
    }
  }

  double min_up_to(int s_bound) const {
    double best = std::numeric_limits<double>::infinity();
    for (int s = 1; s <= std::min(s_bound, s_max); ++s) {
      auto idx = static_cast<std::size_t>(s);
      if (eig.exact) {
        if (exact_min[idx]) best = std::min(best, std::sqrt(exact_min[idx]->get_d()));
      } else {
        best = std::min(best, approx_min[idx]);
      }
    }
    return best;
  }
};

}  // namespace

bool poincare_domain(const EigenData& eig) {
  if (eig.size() == 0) return false;
  const int s0 = real_sign(eig.values.front());
  if (s0 == 0) return false;
  return std::all_of(eig.values.begin(), eig.values.end(), [s0](const Eigenvalue& e) { return real_sign(e) == s0; });
}

std::optional<double> resonance_degree_bound(const EigenData& eig) {
  if (!poincare_domain(eig)) return std::nullopt;
  double max_abs = 0, min_re = std::numeric_limits<double>::infinity();
  for (const auto& e : eig.values) {
    max_abs = std::max(max_abs, std::abs(e.approx));
    min_re = std::min(min_re, std::fabs(e.real()));
  }
  return max_abs / min_re;
}

OmegaData bruno_omega(const EigenData& eig, unsigned k_max, unsigned q_sum_cap) {
  OmegaData out;
  out.k_max = k_max;
  out.q_sum_cap = q_sum_cap;
  if (k_max == 0) return out;
  const std::size_t n = eig.size();
  // Largest admissible sum: strictly below min(2^k_max, cap).
  const double top = std::min(std::ldexp(1.0, static_cast<int>(std::min(k_max, 30u))), static_cast<double>(q_sum_cap));
  const int s_max = static_cast<int>(top) - 1;
  OmegaSearch search(eig, std::max(s_max, 0));
  if (n > 0 && s_max >= 1) search.run(0, s_max + static_cast<int>(n), 0, Gaussian(), {});

  double running = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    OmegaEntry e;
    e.k = k;
    const double bound = std::ldexp(1.0, static_cast<int>(std::min(k, 30u)));
    e.capped = bound > q_sum_cap;
    out.cap_truncated = out.cap_truncated || e.capped;
    e.omega = search.min_up_to(static_cast<int>(std::min(bound, static_cast<double>(q_sum_cap))) - 1);
    if (std::isfinite(e.omega)) running += std::ldexp(1.0, -static_cast<int>(k)) * std::log(1.0 / e.omega);
    e.partial_sum = running;
    out.table.push_back(e);
  }

  const bool all_finite = std::all_of(out.table.begin(), out.table.end(), [](const OmegaEntry& e) {
    return e.omega > 0 && std::isfinite(e.partial_sum);
  });
  if (eig.exact && n > 0) {
    out.bounded = true;
    out.basis = "exact Gaussian-rational spectrum: every nonzero (Q,Lambda) has modulus >= 1/d for a common denominator d";
  } else if (!all_finite) {
    out.bounded = false;
    out.basis = "a searched minimum vanished numerically";
  } else if (out.table.size() >= 2) {
    const auto& a = out.table[out.table.size() - 2];
    const auto& b = out.table.back();
    const double inc_a = a.partial_sum - (out.table.size() >= 3 ? out.table[out.table.size() - 3].partial_sum : 0.0);
    const double inc_b = b.partial_sum - a.partial_sum;
    out.bounded = inc_b <= std::max(inc_a, 0.0);
    out.basis = out.bounded ? "diagnostic: partial-sum increments do not grow over the searched range"
                            : "diagnostic: partial-sum increments still growing at k_max";
  } else {
    out.bounded = true;
    out.basis = "diagnostic: single searched level";
  }
  return out;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::convergent_thm2: return "convergent_thm2";
    case Classification::convergent_thm4a: return "convergent_thm4a";
    case Classification::convergent_thm4b_linearY: return "convergent_thm4b_linearY";
    case Classification::formal_only: return "formal_only";
    case Classification::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ConvergenceReport classify_convergence(const VectorField& x, const std::optional<VectorField>& y, unsigned k) {
  ConvergenceReport rep;
  rep.tested_degree = k;
  const Matrix a = x.linear_part();
  rep.eig_a = eigenvalues(a);
  rep.poincare_a = poincare_domain(rep.eig_a);
  rep.resonance_bound_a = resonance_degree_bound(rep.eig_a);
  rep.omega_a = bruno_omega(rep.eig_a);

  if (a.is_zero()) {
    rep.classification = Classification::inconclusive;
    rep.rule = "the linear part vanishes; normal-form theory does not apply";
    return rep;
  }

  const SNDecomposition sn_a = sn_decompose(a);
  if (rep.poincare_a)
    rep.notes.push_back("spectrum of A lies in a Poincare domain: the normalizing transformation converges "
                        "(resonances possible only up to the reported degree bound)");
  if (sn_a.nilpotent.is_zero() && rep.omega_a.bounded)
    rep.notes.push_back("Theorem 4 (last clause): A semisimple and the omega diagnostic is bounded, so a convergent "
                        "transformation to a (not necessarily linear) normal form is expected");

  if (!y) {
    rep.classification = Classification::formal_only;
    rep.rule = "no symmetry available: the normal form exists as a formal series and no convergence rule applies";
    return rep;
  }

  rep.has_symmetry = true;
  const Matrix b = y->linear_part();
  rep.eig_b = eigenvalues(b);
  rep.poincare_b = poincare_domain(*rep.eig_b);
  rep.omega_b = bruno_omega(*rep.eig_b);
  rep.b_identity = b.is_identity();
  const SNDecomposition sn_b = sn_decompose(b);
  rep.b_semisimple = sn_b.nilpotent.is_zero();
  rep.y_linear = y->is_linear();

  const unsigned fail = commutation_failure_degree(x, *y, k);
  rep.symmetry_through_k = fail == 0;
  {
    const unsigned d = std::max(1u, x.degree() + y->degree());
    VectorField xe(x.components(), d), ye(y->components(), d);
    rep.symmetry_exact = commutation_failure_degree(xe, ye, d) == 0;
  }

  if (rep.b_semisimple && !b.is_zero()) {
    bool kb = true, joint = true;
    for (unsigned m = 2; m <= k; ++m) {
      Matrix ad_b = ad_matrix(b, m);
      const std::size_t dim = ad_b.rows();
      if (kb && rank(ad_b) != dim) kb = false;
      if (joint && rank(ad_matrix(sn_a.semisimple, m).vcat(ad_b)) != dim) joint = false;
      if (!kb && !joint) break;
    }
    rep.ker_b_trivial = kb;
    rep.joint_kernel_trivial = joint;
  }

  if (!rep.symmetry_through_k) {
    rep.classification = Classification::inconclusive;
    rep.rule = "symmetry check failed: [X,Y] has a nonzero term at degree " + std::to_string(fail);
    return rep;
  }
  if (rep.b_identity && rep.symmetry_exact) {
    rep.classification = Classification::convergent_thm2;
    rep.rule = "Theorem 2: polynomial (hence analytic) symmetry with (DY)(0) = I; the linearizing transformation "
               "converges (Theorem 3)";
    return rep;
  }
  if (rep.b_semisimple && rep.ker_b_trivial.value_or(false) && rep.omega_b->bounded && rep.symmetry_exact) {
    rep.classification = Classification::convergent_thm4a;
    rep.diagnostic_conditional = true;
    rep.rule = "Theorem 4a: B semisimple, Ker(ad_B) trivial through degree " + std::to_string(k) +
               ", condition omega bounded (" + rep.omega_b->basis + ")";
    return rep;
  }
  if (rep.b_semisimple && rep.joint_kernel_trivial.value_or(false) && rep.y_linear && rep.symmetry_exact) {
    rep.classification = Classification::convergent_thm4b_linearY;
    rep.rule = "Theorem 4b: joint kernel of ad_A and ad_B trivial through degree " + std::to_string(k) +
               " and Y linear";
    return rep;
  }
  rep.classification = Classification::formal_only;
  if (!rep.symmetry_exact)
    rep.rule = "symmetry holds only through degree " + std::to_string(k) + "; analyticity is not established";
  else
    rep.rule = "the symmetry's linear part meets none of the Theorem 2/4 hypotheses";
  return rep;
}

}  // namespace pdnf
