#include "doctest.h"
#include "helpers.hpp"

using namespace pdnf;
using pdnf::test::field;

namespace {

EigenData spectrum(std::initializer_list<Rational> v) {
  std::vector<Gaussian> g;
  for (const auto& q : v) g.emplace_back(q);
  return exact_spectrum(g);
}

}  // namespace

TEST_SUITE("Poincare domain") {
  TEST_CASE("examples") {
    CHECK(poincare_domain(spectrum({1, 3})));
    CHECK_FALSE(poincare_domain(spectrum({1, -2})));
    CHECK_FALSE(poincare_domain(spectrum({0, 1})));
    CHECK(poincare_domain(exact_spectrum({Gaussian(-1, 4), Gaussian(-1, -4)})));
  }

  TEST_CASE("invariant under positive scaling") {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 20; ++t) {
      std::vector<Gaussian> v;
      for (int i = 0; i < 3; ++i) v.emplace_back(test::random_rational(rng, -3, 3), test::random_rational(rng, -2, 2));
      const Rational c = test::random_rational(rng, 1, 5, 3);
      std::vector<Gaussian> w;
      for (const auto& z : v) w.push_back(z * Gaussian(c));
      CHECK(poincare_domain(exact_spectrum(v)) == poincare_domain(exact_spectrum(w)));
    }
  }

  TEST_CASE("resonance degree bound") {
    CHECK(*resonance_degree_bound(spectrum({1, 3})) == doctest::Approx(3.0));
    CHECK_FALSE(resonance_degree_bound(spectrum({1, -2})));
  }
}

TEST_SUITE("omega diagnostic") {
  TEST_CASE("integer spectra have omega = 1") {
    for (const auto& eig : std::vector{spectrum({1, 1}), spectrum({1, -2}), spectrum({1, 3})}) {
      const auto d = bruno_omega(eig, 6, 40);
      REQUIRE(d.table.size() == 6);
      for (const auto& e : d.table) {
        if (!std::isfinite(e.omega)) continue;  // nothing searched at this level
        CHECK(e.omega == doctest::Approx(1.0));
        CHECK(e.partial_sum == doctest::Approx(0.0));
      }
      CHECK(d.bounded);
    }
  }

  TEST_CASE("non-increasing in k") {
    for (const auto& eig : std::vector{spectrum({Rational(1, 3), Rational(-2, 5)}), exact_spectrum({Gaussian(1, 2), Gaussian(3)})}) {
      const auto d = bruno_omega(eig, 6, 40);
      for (std::size_t i = 1; i < d.table.size(); ++i) CHECK(d.table[i].omega <= d.table[i - 1].omega);
    }
  }

  TEST_CASE("rational spectra are bounded below by one over the common denominator") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 15; ++t) {
      std::vector<Gaussian> v;
      mpz_class den = 1;
      for (int i = 0; i < 2; ++i) {
        Rational q = test::random_rational(rng, -4, 4, 4);
        if (q == 0) q = 1;
        den = lcm(den, q.get_den());
        v.emplace_back(q);
      }
      const auto d = bruno_omega(exact_spectrum(v), 5, 40);
      for (const auto& e : d.table) CHECK(e.omega >= 1.0 / den.get_d() - 1e-12);
    }
  }

  TEST_CASE("cap truncation is flagged") {
    const auto d = bruno_omega(spectrum({1, 2}), 7, 40);
    CHECK(d.cap_truncated);
    CHECK(d.table.back().capped);
    CHECK_FALSE(d.table.front().capped);
  }

  TEST_CASE("irrational spectrum is only a diagnostic") {
    const auto d = bruno_omega(eigenvalues(Matrix{{0, 2}, {1, 0}}), 6, 40);
    CHECK(d.basis.find("diagnostic") != std::string::npos);
  }
}

TEST_SUITE("classification") {
  TEST_CASE("ex1 is convergent by the identity-symmetry rule") {
    const auto r = classify_convergence(test::fixture_field("ex1", 2), test::fixture_symmetry("ex1", "Y", 2), 5);
    CHECK(r.classification == Classification::convergent_thm2);
    CHECK(r.symmetry_exact);
  }

  TEST_CASE("ex2 is convergent by the identity-symmetry rule outside the Poincare domain") {
    const auto r = classify_convergence(test::fixture_field("ex2", 5), test::fixture_symmetry("ex2", "Y", 5), 9);
    CHECK(r.classification == Classification::convergent_thm2);
    CHECK_FALSE(r.poincare_a);
  }

  TEST_CASE("ex3 is convergent with a linear symmetry and trivial joint kernel") {
    const auto r = classify_convergence(test::fixture_field("ex3", 4), test::fixture_symmetry("ex3", "Y", 4), 9);
    CHECK(r.classification == Classification::convergent_thm4b_linearY);
    CHECK(r.joint_kernel_trivial == true);
    CHECK(r.ker_b_trivial == false);
  }

  TEST_CASE("retained resonance and no symmetry is formal only") {
    const auto r = classify_convergence(field("x,y", {"x", "2*y + x^2"}, 2), std::nullopt, 6);
    CHECK(r.classification == Classification::formal_only);
  }

  TEST_CASE("failed symmetry check never yields a convergence verdict") {
    const auto x = field("x,y", {"x", "2*y + x^2"}, 2);
    const auto r = classify_convergence(x, VectorField::dilation(2, 2), 6);
    CHECK_FALSE(r.symmetry_through_k);
    CHECK(r.classification == Classification::inconclusive);
  }

  TEST_CASE("vanishing linear part is inconclusive") {
    const auto r = classify_convergence(field("x,y", {"x^2", "y^2"}, 2), std::nullopt, 4);
    CHECK(r.classification == Classification::inconclusive);
  }

  TEST_CASE("symmetry that holds only through k is formal only") {
    // x^5 d/dx breaks commutation at degree 5, beyond the tested degree.
    const auto x = field("x,y", {"x", "3*y"}, 4);
    const auto r = classify_convergence(x, field("x,y", {"x + x^5", "y"}, 5), 4);
    CHECK(r.symmetry_through_k);
    CHECK_FALSE(r.symmetry_exact);
    CHECK(r.classification == Classification::formal_only);
  }

  TEST_CASE("semisimple B with trivial kernel and exact spectrum is conditionally convergent") {
    // diag(5, 7) has no resonances at any degree.
    const auto x = field("x,y", {"2*x", "3*y"}, 2);
    const auto y = VectorField::linear(Matrix{{5, 0}, {0, 7}}, 2);
    const auto r = classify_convergence(x, y, 6);
    CHECK(r.ker_b_trivial == true);
    CHECK(r.classification == Classification::convergent_thm4a);
    CHECK(r.diagnostic_conditional);
  }
}
