#include "pdnf/flow_check.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pdnf/error.hpp"

namespace pdnf {
namespace {

using Vec = std::vector<double>;

std::vector<double> eval_map(const std::vector<Polynomial>& map, const Vec& x) {
  Vec out(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) out[i] = map[i].evaluate(std::span<const double>(x));
  return out;
}

Vec axpy(const Vec& x, double a, const Vec& k) {
  Vec out(x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * k[i];
  return out;
}

void rk4(const VectorField& f, Vec& x, double h) {
  Vec k1 = f.evaluate(x);
  Vec k2 = f.evaluate(axpy(x, h / 2, k1));
  Vec k3 = f.evaluate(axpy(x, h / 2, k2));
  Vec k4 = f.evaluate(axpy(x, h, k3));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
}

double norm(const Vec& v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

bool blown(const Vec& v, double limit) {
  return std::any_of(v.begin(), v.end(), [&](double c) { return !std::isfinite(c) || std::fabs(c) > limit; });
}

}  // namespace

FlowCheckReport flow_consistency_check(const VectorField& original, const VectorField& normalized,
                                       const NearIdentityMap& transformation, const FlowCheckOptions& opt) {
  const std::size_t n = original.dimension();
  if (normalized.dimension() != n || transformation.dimension() != n)
    throw DimensionError("flow check: dimension mismatch");
  if (!(opt.step > 0) || !(opt.t_end >= 0) || !(opt.radius >= 0))
    throw PreconditionError("flow check: step must be positive, t_end and radius non-negative");
  if (opt.samples == 0) throw PreconditionError("flow check: need at least one sample");

  FlowCheckReport rep;
  rep.samples = opt.samples;
  rep.radius = opt.radius;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  const auto steps = static_cast<std::size_t>(std::llround(opt.t_end / opt.step));

  for (unsigned s = 0; s < opt.samples && !rep.diverged; ++s) {
    Vec x(n);
    do {
      for (double& c : x) c = gauss(rng);
    } while (norm(x) == 0.0);
    const double scale = opt.radius / norm(x);
    for (double& c : x) c *= scale;

    Vec u = eval_map(transformation.forward(), x);
    for (std::size_t i = 0; i < steps; ++i) {
      rk4(original, x, opt.step);
      rk4(normalized, u, opt.step);
      Vec back = eval_map(transformation.inverse(), u);
      if (blown(x, opt.blowup) || blown(u, opt.blowup) || blown(back, opt.blowup)) {
        rep.diverged = true;
        rep.max_deviation = std::numeric_limits<double>::infinity();
        break;
      }
      double d = 0;
      for (std::size_t j = 0; j < n; ++j) d = std::max(d, std::fabs(x[j] - back[j]));
      rep.max_deviation = std::max(rep.max_deviation, d);
    }
  }
  rep.passed = !rep.diverged && rep.max_deviation <= opt.tol;
  return rep;
}

FlowCheckReport flow_consistency_check(const VectorField& original, const NormalFormResult& result,
                                       const FlowCheckOptions& opt) {
  return flow_consistency_check(original, result.normalized, result.transformation, opt);
}

}  // namespace pdnf
