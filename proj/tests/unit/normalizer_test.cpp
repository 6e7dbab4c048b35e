#include "doctest.h"
#include "helpers.hpp"

using namespace pdnf;
using pdnf::test::field;

namespace {

// Every degree-m part of the normalized field lies in Ker(ad_{A_s}).
void check_remainders_resonant(const NormalFormResult& nf) {
  const std::size_t n = nf.normalized.dimension();
  for (unsigned m = 2; m <= nf.degree; ++m) {
    const auto b = graded_basis(n, m);
    const auto coords = b.coordinates(nf.normalized.homogeneous_part(m));
    const auto rs = resonant_subspace(nf.semisimple_part, m);
    if (rs.kernel.empty()) {
      CHECK(std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; }));
    } else {
      CHECK(solve_linear(Matrix::from_columns(rs.kernel, b.size()), coords).feasible);
    }
  }
}

}  // namespace

TEST_SUITE("normalize_step") {
  TEST_CASE("linear field is untouched") {
    const auto f = field("x,y", {"x - y", "2*y"}, 4);
    const auto out = normalize_step(f, 2);
    for (const auto& g : out.step.generator) CHECK(g.is_zero());
    CHECK(out.updated == f);
  }

  TEST_CASE("resonant quadratic term survives") {
    const auto f = field("x,y", {"x", "2*y + x^2"}, 4);
    const auto out = normalize_step(f, 2);
    for (const auto& g : out.step.generator) CHECK(g.is_zero());
    CHECK(out.updated.homogeneous_part(2)[1] == test::poly("x,y", "x^2"));
    REQUIRE(out.step.kernel_basis.size() == 1);
    REQUIRE(out.step.remainder.size() == 1);
    CHECK(out.step.remainder[0] != 0);
  }

  TEST_CASE("lower degrees are never modified") {
    const auto f = field("x,y", {"x + x*y + y^3", "3*y - x^2 + x^3"}, 5);
    const auto out = normalize_step(f, 3);
    CHECK(out.updated.truncated(2) == f.truncated(2));
  }

  TEST_CASE("vanishing linear part is refused") {
    CHECK_THROWS_AS(normalize_step(field("x", {"x^2"}, 3), 2), DegenerateLinearPartError);
    CHECK_THROWS_AS(normal_form(field("x", {"x^2"}, 3), 3), DegenerateLinearPartError);
  }
}

TEST_SUITE("normal_form") {
  TEST_CASE("ex1 linearizes via u = y - x^2") {
    const auto r = normal_form(test::fixture_field("ex1", 5), 5);
    CHECK(r.normalized == field("x,y", {"x", "3*y"}, 5));
    CHECK(r.transformation.forward() == test::polys("x,y", {"x", "y - x^2"}));
    CHECK(r.transformation.inverse() == test::polys("x,y", {"x", "y + x^2"}));
    CHECK(r.steps.size() == 4);
  }

  TEST_CASE("ex2 reduces to its linear part") {
    const auto r = normal_form(test::fixture_field("ex2", 9), 9);
    CHECK(r.normalized.is_linear());
    CHECK(r.normalized.linear_part() == Matrix{{1, 0}, {0, -2}});
  }

  TEST_CASE("resonant term is retained exactly") {
    const auto r = normal_form(field("x,y", {"x", "2*y + x^2"}, 4), 4);
    CHECK(r.normalized == field("x,y", {"x", "2*y + x^2"}, 4));
  }

  TEST_CASE("round trip reproduces the input") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 1 + t % 3;
      const unsigned k = 4 + t % 2;
      Matrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) a(i, i) = test::random_rational(rng, -3, 3);
      if (a.is_zero()) a(0, 0) = 1;
      const VectorField f = VectorField::linear(a, k) + test::random_field(rng, n, 2, k, 0.3);
      const auto r = normal_form(f, k);
      CHECK(r.reconstruct_original() == f);
      check_remainders_resonant(r);
    }
  }

  TEST_CASE("non-semisimple linear part normalizes with the semisimple kernel") {
    const auto f = field("x,y", {"x + y + y^2", "y + x*y"}, 4);
    const auto r = normal_form(f, 4);
    CHECK(r.semisimple_part == Matrix::identity(2));
    CHECK(r.normalized.is_linear());
    CHECK(r.reconstruct_original() == f);
  }

  TEST_CASE("output is deterministic") {
    const auto f = test::fixture_field("ex3", 6);
    const auto a = normal_form(f, 6), b = normal_form(f, 6);
    CHECK(a.normalized == b.normalized);
    CHECK(a.transformation == b.transformation);
    CHECK(a.steps == b.steps);
  }
}

TEST_SUITE("joint_normal_form") {
  TEST_CASE("ex3 with its linear symmetry") {
    const auto x = test::fixture_field("ex3", 9);
    const auto y = test::fixture_symmetry("ex3", "Y", 9);
    const auto r = joint_normal_form(x, y, 9);
    CHECK(r.x.normalized == VectorField::linear(Matrix{{1, 0, 0}, {0, -3, 0}, {0, 0, 9}}, 9));
    CHECK(r.y.normalized.is_linear());
    CHECK(r.x.transformation == r.y.transformation);
    CHECK(commutation_failure_degree(r.x.normalized, r.y.normalized, 9) == 0);
  }

  TEST_CASE("commuting linear fields stay put") {
    const auto x = VectorField::linear(Matrix{{1, 0}, {0, 2}}, 5);
    const auto y = VectorField::linear(Matrix{{3, 0}, {0, -1}}, 5);
    const auto r = joint_normal_form(x, y, 5);
    CHECK(r.x.normalized == x);
    CHECK(r.y.normalized == y);
    CHECK(r.x.transformation.forward() == identity_map(2));
  }

  TEST_CASE("ex1 with its symmetry: X linear and Y the dilation") {
    const auto r = joint_normal_form(test::fixture_field("ex1", 5), test::fixture_symmetry("ex1", "Y", 5), 5);
    CHECK(r.x.normalized == field("x,y", {"x", "3*y"}, 5));
    CHECK(r.y.normalized == VectorField::dilation(2, 5));
  }

  TEST_CASE("non-commuting pair is rejected with the failing degree") {
    const auto x = field("x,y", {"x", "2*y + x^2"}, 4);
    try {
      joint_normal_form(x, VectorField::dilation(2, 4), 4);
      FAIL("expected CommutationError");
    } catch (const CommutationError& e) {
      CHECK(e.degree() == 2);
    }
  }
}

TEST_SUITE("linearize_via_symmetry") {
  TEST_CASE("ex1") {
    const auto c = linearize_via_symmetry(test::fixture_field("ex1", 5), test::fixture_symmetry("ex1", "Y", 5), 5);
    CHECK(c.verdict == Verdict::linear_through_k);
    CHECK(c.degree == 5);
    CHECK(c.normalized_x.linear_part() == Matrix{{1, 0}, {0, 3}});
    CHECK(c.symmetry_is_dilation);
  }

  TEST_CASE("ex2") {
    const auto c = linearize_via_symmetry(test::fixture_field("ex2", 9), test::fixture_symmetry("ex2", "Y", 9), 9);
    CHECK(c.verdict == Verdict::linear_through_k);
    CHECK(c.normalized_x.is_linear());
  }

  TEST_CASE("symmetry generator is unique when B = I") {
    const auto c = linearize_via_symmetry(test::fixture_field("ex2", 9), test::fixture_symmetry("ex2", "Y", 9), 9);
    for (auto d : c.solution_dimensions) CHECK(d == 0);
  }

  TEST_CASE("symmetry without identity linear part is refused") {
    CHECK_THROWS_AS(linearize_via_symmetry(test::fixture_field("ex3", 4), test::fixture_symmetry("ex3", "Y", 4), 4),
                    PreconditionError);
  }

  TEST_CASE("certificate view reconstructs the input") {
    const auto x = test::fixture_field("ex1", 6);
    const auto c = linearize_via_symmetry(x, test::fixture_symmetry("ex1", "Y", 6), 6);
    CHECK(c.as_normal_form(x).reconstruct_original() == x);
  }

  TEST_CASE("constructed ground truth") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = 2 + t % 2;
      const unsigned k = 5;
      const auto phi = test::random_near_identity(rng, n, 3);
      const auto a = test::random_matrix(rng, n, -3, 3);
      const auto x = pushforward(VectorField::linear(a, k), phi, k);
      const auto y = pushforward(VectorField::dilation(n, k), phi, k);
      const auto c = linearize_via_symmetry(x, y, k);
      CHECK(c.verdict == Verdict::linear_through_k);
      CHECK(c.normalized_x.linear_part() == a);
    }
  }
}

TEST_SUITE("flow check") {
  TEST_CASE("ex1 linearization") {
    const auto x = test::fixture_field("ex1", 5);
    const auto r = normal_form(x, 5);
    FlowCheckOptions opt;
    opt.radius = 0.1;
    opt.t_end = 1;
    opt.tol = 1e-6;
    const auto rep = flow_consistency_check(x, r, opt);
    CHECK(rep.passed);
    CHECK_FALSE(rep.diverged);
  }

  TEST_CASE("identity transformation on a linear field") {
    const auto x = VectorField::linear(Matrix{{-1, 2}, {-2, -1}}, 3);
    const auto rep = flow_consistency_check(x, x, NearIdentityMap::identity(2, 3), FlowCheckOptions{});
    CHECK(rep.max_deviation < 1e-12);
  }

  TEST_CASE("same seed, same answer") {
    const auto x = test::fixture_field("a3", 7);
    const auto r = normal_form(x, 7);
    FlowCheckOptions opt;
    opt.radius = 0.3;
    opt.seed = 99;
    CHECK(flow_consistency_check(x, r, opt).max_deviation == flow_consistency_check(x, r, opt).max_deviation);
  }
}
