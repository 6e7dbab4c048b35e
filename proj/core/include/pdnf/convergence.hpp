#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdnf/eigen.hpp"
#include "pdnf/normal_form.hpp"
#include "pdnf/vector_field.hpp"

namespace pdnf {

/// True iff all real parts are nonzero and share one sign.
bool poincare_domain(const EigenData& eig);

/// In a Poincare domain every resonance has degree <= max|lambda| / min|Re lambda|.
/// Empty outside a Poincare domain.
std::optional<double> resonance_degree_bound(const EigenData& eig);

struct OmegaEntry {
  unsigned k = 0;
  /// min |(Q, Lambda)| over the searched Q; +inf if every value vanished.
  double omega = 0.0;
  /// sum_{j <= k} 2^{-j} ln(1 / omega_j).
  double partial_sum = 0.0;
  /// The upper bound 2^k exceeded the cap, so the search was cut short.
  bool capped = false;
};

struct OmegaData {
  std::vector<OmegaEntry> table;
  unsigned k_max = 0;
  unsigned q_sum_cap = 0;
  bool cap_truncated = false;
  /// Diagnostic verdict; never a proof for irrational spectra.
  bool bounded = false;
  std::string basis;  ///< why `bounded` was set
};

inline constexpr unsigned kDefaultOmegaK = 6;
inline constexpr unsigned kDefaultQSumCap = 40;

/// Bruno's small-divisor minima: for each k, the minimum of |sum q_i lambda_i|
/// over integer vectors with q_i >= -1, nonzero value, and
/// 1 <= sum q_i < min(2^k, q_sum_cap).
OmegaData bruno_omega(const EigenData& eig, unsigned k_max = kDefaultOmegaK, unsigned q_sum_cap = kDefaultQSumCap);

enum class Classification { convergent_thm2, convergent_thm4a, convergent_thm4b_linearY, formal_only, inconclusive };

const char* to_string(Classification c);

struct ConvergenceReport {
  EigenData eig_a;
  std::optional<EigenData> eig_b;
  bool poincare_a = false;
  std::optional<bool> poincare_b;
  std::optional<double> resonance_bound_a;
  OmegaData omega_a;
  std::optional<OmegaData> omega_b;

  unsigned tested_degree = 0;
  bool has_symmetry = false;
  bool symmetry_through_k = false;  ///< [X,Y] = 0 through the tested degree
  bool symmetry_exact = false;      ///< [X,Y] = 0 as polynomials, all degrees
  bool b_identity = false;
  bool b_semisimple = false;
  bool y_linear = false;
  std::optional<bool> ker_b_trivial;         ///< through the tested degree
  std::optional<bool> joint_kernel_trivial;  ///< through the tested degree

  Classification classification = Classification::inconclusive;
  std::string rule;
  bool diagnostic_conditional = false;
  std::vector<std::string> notes;
};

/// Decision tree over Theorems 2-4. Components of x and y are taken as exact
/// polynomials; kernel conditions are certified degree by degree through k.
ConvergenceReport classify_convergence(const VectorField& x, const std::optional<VectorField>& y,
                                       unsigned k = kDefaultDegree);

}  // namespace pdnf
