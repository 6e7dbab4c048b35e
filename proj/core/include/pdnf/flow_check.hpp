#pragma once

#include <cstdint>
#include <limits>

#include "pdnf/normal_form.hpp"

namespace pdnf {

struct FlowCheckOptions {
  double radius = 0.1;
  double t_end = 1.0;
  double tol = 1e-6;
  double step = 1e-3;
  unsigned samples = 16;
  std::uint64_t seed = 0;
  /// Trajectories leaving this ball count as divergent.
  double blowup = 1e6;
};

struct FlowCheckReport {
  double max_deviation = 0.0;
  bool passed = false;
  bool diverged = false;
  unsigned samples = 0;
  double radius = 0.0;
};

/// Integrates the original field from x0 (|x0| = radius) and the normalized
/// field from u0 = forward(x0) with fixed-step RK4, then compares x(t) with
/// inverse(u(t)) at every step. Deviation is infinite when either trajectory
/// blows up.
FlowCheckReport flow_consistency_check(const VectorField& original, const VectorField& normalized,
                                       const NearIdentityMap& transformation, const FlowCheckOptions& opt);

FlowCheckReport flow_consistency_check(const VectorField& original, const NormalFormResult& result,
                                       const FlowCheckOptions& opt);

}  // namespace pdnf
