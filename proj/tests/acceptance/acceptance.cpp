// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "pdnf/app/dsl.hpp"
#include "pdnf/app/fixtures.hpp"

using namespace pdnf;
using pdnf::test::field;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) o.require(false, "took " + std::to_string(secs) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              o.detail.tellp() > 0 ? ": " : "", o.detail.str().c_str());
  std::fflush(stdout);
}

VectorField extended(const VectorField& f, unsigned k) { return VectorField(f.components(), k); }

bool commutes_exactly(const VectorField& a, const VectorField& b) {
  const unsigned d = std::max(1u, a.degree() + b.degree());
  return commutation_failure_degree(extended(a, d), extended(b, d), d) == 0;
}

std::size_t brute_force_resonances(const std::vector<int>& l, unsigned m) {
  std::size_t count = 0;
  for (const auto& mono : monomials_of_degree(l.size(), m)) {
    long s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += static_cast<long>(mono[i]) * l[i];
    for (int lr : l) count += s == lr ? 1 : 0;
  }
  return count;
}

std::string monomial_text(const Monomial& m) {
  static const char* names[] = {"x", "y", "z"};
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < 3 ? names[i] : "x" + std::to_string(i + 1);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

int main() {
  criterion(1, "ex1 end to end", 1.0, [](Outcome& o) {
    const auto x = test::fixture_field("ex1", 5);
    const auto s = find_symmetry(x, Matrix::identity(2), 5);
    o.require(!s.obstructed(), "symmetry obstructed");
    o.require(s.symmetry == field("x,y", {"x", "y + x^2"}, 5), "symmetry differs from (x, y + x^2)");
    const auto c = linearize_via_symmetry(x, s.symmetry, 5);
    o.require(c.verdict == Verdict::linear_through_k && c.degree == 5, "not linear through 5");
    o.require(c.normalized_x == VectorField::linear(Matrix{{1, 0}, {0, 3}}, 5), "normalized field is not diag(1,3)");
  });

  criterion(2, "resonance fidelity", 0, [](Outcome& o) {
    const auto one_three = exact_spectrum({Gaussian(1), Gaussian(3)});
    const auto rs = enumerate_resonances(one_three, 5);
    o.require(rs.size() == 1, std::to_string(rs.size()) + " resonances for (1,3)");
    if (!rs.empty()) o.require(rs[0].multi_index == Monomial{3, 0} && rs[0].component == 1, "wrong resonance");
    for (unsigned m = 2; m <= 5; ++m)
      o.require(resonant_subspace(Matrix{{1, 0}, {0, 3}}, m).kernel.size() == (m == 3 ? 1u : 0u),
                "kernel size at degree " + std::to_string(m));
    o.require(enumerate_resonances(exact_spectrum({Gaussian(1), Gaussian(1)}), 8).empty(), "resonance for A = I");
    for (unsigned m = 2; m <= 8; ++m)
      o.require(resonant_subspace(Matrix::identity(2), m).kernel.empty(), "kernel for A = I");
  });

  criterion(3, "ex2", 5.0, [](Outcome& o) {
    const auto x = test::fixture_field("ex2", 9);
    const auto r = normal_form(x, 9);
    o.require(r.normalized == VectorField::linear(Matrix{{1, 0}, {0, -2}}, 9), "normal form is not linear");
    o.require(r.reconstruct_original() == x, "round trip");
    o.require(commutes_exactly(test::fixture_field("ex2", 1), test::fixture_symmetry("ex2", "Y", 1)),
              "[X, Y] != 0");
  });

  criterion(4, "ex3 joint normal form", 10.0, [](Outcome& o) {
    const auto x = test::fixture_field("ex3", 9);
    const auto y = test::fixture_symmetry("ex3", "Y", 9);
    const auto r = joint_normal_form(x, y, 9);
    o.require(r.x.normalized.is_linear(), "X not linear");
    o.require(r.y.normalized.is_linear(), "Y not linear");
    const auto as = sn_decompose(x.linear_part()).semisimple, bs = sn_decompose(y.linear_part()).semisimple;
    for (unsigned m = 2; m <= 9; ++m) {
      const Matrix stacked = ad_matrix(as, m).vcat(ad_matrix(bs, m));
      o.require(rank(stacked) == stacked.cols(), "joint kernel nonzero at degree " + std::to_string(m));
    }
  });

  criterion(5, "ex5 round trip", 60.0, [](Outcome& o) {
    const app::Bindings at{{"alpha", Rational(1, 2)}, {"beta", Rational(2)}};
    const auto bound = app::bind(app::parse_field(*app::fixture_text("ex5")), at);
    const VectorField& x = bound.field;  // truncation = its degree
    const VectorField& y = bound.symmetries.front().field;
    const Matrix a{{Rational(1, 2), -1, 0}, {1, Rational(1, 2), 0}, {0, 0, 2}};

    // Compare well past the printed degree so that any series tail would show.
    const unsigned kc = x.degree() + 3;
    const auto phi = test::polys("x,y,z", {"x + (x^2 + y)^3", "y + x^2", "z - y^3 - (x^2 + y)^2"});
    const auto pushed = pushforward(VectorField::linear(a, kc), phi, kc);
    const auto printed = extended(x, kc);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      auto diff = pushed.components()[i];
      diff -= printed.components()[i];
      for (const auto& [m, c] : diff.terms()) {
        if (mismatches < 12)
          std::printf("     component %zu, %s: transformed %s, printed %s\n", i + 1, monomial_text(m).c_str(),
                      pushed.components()[i].coefficient(m).get_str().c_str(),
                      printed.components()[i].coefficient(m).get_str().c_str());
        ++mismatches;
      }
    }
    if (mismatches > 0)
      std::printf("     %zu coefficient mismatch(es) between the transformed linear field and the printed field\n",
                  mismatches);

    o.require(commutes_exactly(x, y), "[X, Y] != 0");
    const unsigned k = 12;
    const auto c = linearize_via_symmetry(extended(x, k), extended(y, k), k);
    o.require(c.verdict == Verdict::linear_through_k && c.degree == k, "not linear through 12");
    o.require(c.normalized_x.linear_part() == a, "linear part differs");
  });

  criterion(6, "resonance kernel versus brute force", 0, [](Outcome& o) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> pick(-3, 3), dim(1, 3);
    for (int t = 0; t < 50; ++t) {
      std::vector<int> l(static_cast<std::size_t>(dim(rng)));
      for (auto& v : l)
        do v = pick(rng);
        while (v == 0);
      std::vector<Rational> d(l.begin(), l.end());
      const Matrix a = Matrix::diagonal(d);
      for (unsigned m = 2; m <= 5; ++m) {
        const std::size_t got = rref_kernel_image(ad_matrix(a, m)).kernel.size(), want = brute_force_resonances(l, m);
        if (got != want) o.require(false, "trial " + std::to_string(t) + " degree " + std::to_string(m));
      }
    }
  });

  criterion(7, "Chevalley decomposition properties", 0, [](Outcome& o) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
      Matrix m = test::random_matrix(rng, n, -3, 3, 2);
      if (t % 4 == 1 && n > 1) {
        // Repeated eigenvalue with a nilpotent part, conjugated by a random unimodular-ish matrix.
        Matrix j = Matrix::identity(n) * test::random_rational(rng, -2, 2);
        for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
        Matrix p = Matrix::identity(n);
        for (std::size_t i = 0; i + 1 < n; ++i) p(i + 1, i) = test::random_rational(rng, -2, 2);
        m = p * j * *inverse(p);
      }
      const auto sn = sn_decompose(m);
      bool ok = sn.semisimple + sn.nilpotent == m && sn.semisimple * sn.nilpotent == sn.nilpotent * sn.semisimple &&
                sn.nilpotent.pow(static_cast<unsigned>(n)).is_zero();
      const auto mp = minimal_poly(sn.semisimple);
      ok = ok && gcd(mp, mp.derivative()).degree() == 0;
      if (!ok) o.require(false, "trial " + std::to_string(t));
    }
  });

  criterion(8, "constructed ground truth", 0, [](Outcome& o) {
    std::mt19937_64 rng(8);
    const unsigned k = 6;
    for (int t = 0; t < 25; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
      const auto phi = test::random_near_identity(rng, n, 3);
      const auto a = test::random_matrix(rng, n, -3, 3, 2);
      const auto x = pushforward(VectorField::linear(a, k), phi, k);
      const auto s = find_symmetry(x, Matrix::identity(n), k);
      if (s.obstructed()) {
        o.require(false, "trial " + std::to_string(t) + " symmetry obstructed");
        continue;
      }
      const auto c = linearize_via_symmetry(x, s.symmetry, k);
      if (c.verdict != Verdict::linear_through_k || !c.normalized_x.is_linear() || c.normalized_x.linear_part() != a)
        o.require(false, "trial " + std::to_string(t) + " not linearized");
    }
  });

  criterion(9, "obstruction detection", 0, [](Outcome& o) {
    const auto x = test::fixture_field("obstructed", 6);
    o.require(x == field("x,y", {"x", "2*y + x^2"}, 6), "fixture differs from (x, 2y + x^2)");
    const auto s = find_symmetry(x, Matrix::identity(2), 6);
    o.require(s.obstruction_degree == 2u, "no obstruction at degree 2");
    const auto r = normal_form(x, 6);
    o.require(r.normalized == x, "normal form does not retain x^2 e2");
  });

  criterion(10, "convergence classifier", 0, [](Outcome& o) {
    const auto c1 = classify_convergence(test::fixture_field("ex1", 5), test::fixture_symmetry("ex1", "Y", 5), 5);
    o.require(c1.classification == Classification::convergent_thm2, std::string("ex1: ") + to_string(c1.classification));
    const auto c2 = classify_convergence(test::fixture_field("ex2", 9), test::fixture_symmetry("ex2", "Y", 9), 9);
    o.require(c2.classification == Classification::convergent_thm2, std::string("ex2: ") + to_string(c2.classification));
    const auto c3 = classify_convergence(test::fixture_field("ex3", 9), test::fixture_symmetry("ex3", "Y", 9), 9);
    o.require(c3.classification == Classification::convergent_thm4b_linearY,
              std::string("ex3: ") + to_string(c3.classification));
    // The obstructed system: find_symmetry fails, so no symmetry is passed on.
    const auto x = test::fixture_field("obstructed", 6);
    const auto s = find_symmetry(x, Matrix::identity(2), 6);
    const auto c4 = classify_convergence(x, s.obstructed() ? std::nullopt : std::optional(s.symmetry), 6);
    o.require(c4.classification == Classification::formal_only,
              std::string("obstructed: ") + to_string(c4.classification));
  });

  criterion(11, "flow validation", 0, [](Outcome& o) {
    const auto x = test::fixture_field("a3", 9);
    const auto r = normal_form(x, 9);
    o.require(r.normalized.is_linear(), "not linearized");
    double prev = -1;
    for (double radius : {0.05, 0.2, 0.5, 0.8}) {
      FlowCheckOptions opt;
      opt.radius = radius;
      opt.tol = 1e-4;
      opt.step = 1e-3;
      opt.t_end = 1;
      const auto rep = flow_consistency_check(x, r, opt);
      std::printf("     radius %.2f: max deviation %.3e%s\n", radius, rep.max_deviation, rep.diverged ? " (diverged)" : "");
      if (radius == 0.05) o.require(rep.passed, "fails at radius 0.05");
      o.require(rep.max_deviation > prev, "deviation not increasing at radius " + std::to_string(radius));
      prev = rep.max_deviation;
    }
  });

  criterion(12, "bracket algebra", 0, [](Outcome& o) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
      const unsigned k = 1 + static_cast<unsigned>(t % 5);
      const auto a = test::random_field(rng, n, 1, k), b = test::random_field(rng, n, 1, k),
                 c = test::random_field(rng, n, 1, k);
      const auto ab = lie_bracket(a, b);
      bool ok = ab == -lie_bracket(b, a);
      ok = ok && lie_bracket(ab, c) + lie_bracket(lie_bracket(b, c), a) + lie_bracket(lie_bracket(c, a), b) ==
                     VectorField::zero(n, k);
      ok = ok && ab.linear_part() == commutator(b.linear_part(), a.linear_part());
      // Identity linear parts bracket to a field with vanishing linear part.
      const auto ia = VectorField::dilation(n, k) + test::random_field(rng, n, 2, k),
                 ib = VectorField::dilation(n, k) + test::random_field(rng, n, 2, k);
      ok = ok && lie_bracket(ia, ib).linear_part().is_zero();
      if (!ok) o.require(false, "trial " + std::to_string(t));
    }
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
