#include "doctest.h"
#include "helpers.hpp"

using namespace pdnf;

namespace {

// Brute-force count of (m, r) with sum m_i l_i = l_r over integer spectra.
std::size_t brute_force_resonances(const std::vector<int>& l, unsigned m) {
  std::size_t count = 0;
  for (const auto& mono : monomials_of_degree(l.size(), m)) {
    long s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += static_cast<long>(mono[i]) * l[i];
    for (int lr : l) count += s == lr ? 1 : 0;
  }
  return count;
}

EigenData integer_spectrum(const std::vector<int>& l) {
  std::vector<Gaussian> g;
  for (int v : l) g.emplace_back(Rational(v));
  return exact_spectrum(g);
}

Matrix diag(const std::vector<int>& l) {
  std::vector<Rational> d(l.begin(), l.end());
  return Matrix::diagonal(d);
}

}  // namespace

TEST_SUITE("graded basis") {
  TEST_CASE("sizes") {
    CHECK(graded_basis(2, 2).size() == 6);
    CHECK(graded_basis(1, 3).size() == 1);
    CHECK(graded_basis(3, 12).size() == 273);
  }

  TEST_CASE("ordering is component-major then graded-lex") {
    const auto b = graded_basis(2, 2);
    CHECK(b[0].component == 0);
    CHECK(b[0].monomial == Monomial{2, 0});
    CHECK(b[2].monomial == Monomial{0, 2});
    CHECK(b[3].component == 1);
    CHECK(b.index_of(Monomial{1, 1}, 1) == 4);
  }

  TEST_CASE("coordinates and fields are inverse") {
    const auto b = graded_basis(2, 3);
    const auto comps = test::polys("x,y", {"x^3 - 2*x*y^2", "1/2*y^3 + x"});
    const auto c = b.coordinates(comps);
    const auto back = b.field(c);
    CHECK(back[0] == test::poly("x,y", "x^3 - 2*x*y^2"));
    CHECK(back[1] == test::poly("x,y", "1/2*y^3"));
  }
}

TEST_SUITE("homological operator") {
  TEST_CASE("diag(1,3) on quadratics is invertible") {
    const auto ad = ad_matrix(Matrix{{1, 0}, {0, 3}}, 2);
    CHECK(ad.is_diagonal());
    for (std::size_t i = 0; i < ad.rows(); ++i) CHECK(ad(i, i) != 0);
  }

  TEST_CASE("identity gives (m-1) times identity") {
    for (unsigned m = 2; m <= 5; ++m)
      CHECK(ad_matrix(Matrix::identity(3), m) == Matrix::identity(graded_basis(3, m).size()) * Rational(m - 1));
  }

  TEST_CASE("agrees with the Lie bracket") {
    const Matrix a{{1, 2}, {-1, 0}};
    const auto b = graded_basis(2, 3);
    const auto ad = ad_matrix(a, 3);
    const auto h = test::polys("x,y", {"x^3 + 2*x*y^2", "-y^3 + x^2*y"});
    const auto lhs = ad * std::span<const Rational>(b.coordinates(h));
    const auto br = lie_bracket(VectorField::linear(a, 3), VectorField(h, 3));
    CHECK(lhs == b.coordinates(br.homogeneous_part(3)));
  }

  TEST_CASE("linear in A") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 10; ++t) {
      const auto a = test::random_matrix(rng, 2, -2, 2), b = test::random_matrix(rng, 2, -2, 2);
      CHECK(ad_matrix(a + b, 3) == ad_matrix(a, 3) + ad_matrix(b, 3));
    }
  }

  TEST_CASE("is a Lie algebra homomorphism") {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 2 + t % 2;
      const auto a = test::random_matrix(rng, n, -2, 2), b = test::random_matrix(rng, n, -2, 2);
      for (unsigned m = 2; m <= 4; ++m) {
        // [Ax, Bx] is the linear field (BA - AB)x.
        const Matrix c = commutator(b, a);
        CHECK(ad_matrix(c, m) == commutator(ad_matrix(a, m), ad_matrix(b, m)));
      }
    }
  }
}

TEST_SUITE("resonant subspace") {
  TEST_CASE("diag(1,3) at degree 3 is spanned by x^3 in component 2") {
    const auto rs = resonant_subspace(Matrix{{1, 0}, {0, 3}}, 3);
    REQUIRE(rs.kernel.size() == 1);
    const auto b = graded_basis(2, 3);
    const auto f = b.field(rs.kernel[0]);
    CHECK(f[0].is_zero());
    CHECK(f[1].terms().size() == 1);
    CHECK(f[1].coefficient(Monomial{3, 0}) != 0);
  }

  TEST_CASE("identity has no resonances") {
    for (unsigned m = 2; m <= 6; ++m) CHECK(resonant_subspace(Matrix::identity(2), m).kernel.empty());
  }

  TEST_CASE("diag(1,-2) at degree 4") {
    const auto rs = resonant_subspace(Matrix{{1, 0}, {0, -2}}, 4);
    REQUIRE(rs.kernel.size() == 2);
    const auto b = graded_basis(2, 4);
    const auto x3y = Monomial{3, 1}, x2y2 = Monomial{2, 2};
    std::vector<Rational> e1(b.size()), e2(b.size());
    e1[b.index_of(x3y, 0)] = 1;
    e2[b.index_of(x2y2, 1)] = 1;
    const auto basis = Matrix::from_columns(rs.kernel, b.size());
    CHECK(solve_linear(basis, e1).feasible);
    CHECK(solve_linear(basis, e2).feasible);
  }

  TEST_CASE("kernel and image span V_m for semisimple input") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
      const auto s = sn_decompose(test::random_matrix(rng, 2, -2, 2)).semisimple;
      for (unsigned m = 2; m <= 4; ++m) {
        const auto rs = resonant_subspace(s, m);
        const std::size_t dim = graded_basis(2, m).size();
        CHECK(rs.kernel.size() + rs.image.size() == dim);
        auto all = rs.kernel;
        all.insert(all.end(), rs.image.begin(), rs.image.end());
        CHECK(rank(Matrix::from_columns(all, dim)) == dim);
      }
    }
  }
}

TEST_SUITE("resonance enumeration") {
  TEST_CASE("(1,3) through degree 5") {
    const auto rs = enumerate_resonances(integer_spectrum({1, 3}), 5);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].multi_index == Monomial{3, 0});
    CHECK(rs[0].component == 1);
    CHECK(rs[0].exact);
  }

  TEST_CASE("(1,1) has none through degree 8") { CHECK(enumerate_resonances(integer_spectrum({1, 1}), 8).empty()); }

  TEST_CASE("ex3 spectra share no resonance") {
    const auto a = enumerate_resonances(integer_spectrum({1, -3, 9}), 9);
    const auto b = enumerate_resonances(integer_spectrum({1, -2, 4}), 9);
    CHECK_FALSE(a.empty());
    CHECK_FALSE(b.empty());
    for (const auto& ra : a)
      for (const auto& rb : b) CHECK_FALSE((ra.multi_index == rb.multi_index && ra.component == rb.component));
  }

  TEST_CASE("Gaussian spectrum") {
    const auto rs = enumerate_resonances(exact_spectrum({Gaussian(0, 1), Gaussian(0, -1)}), 3);
    CHECK(rs.size() == 2);
  }

  TEST_CASE("approximate spectra are flagged") {
    const auto e = eigenvalues(Matrix{{0, 2}, {1, 0}});
    for (const auto& r : enumerate_resonances(e, 5)) CHECK_FALSE(r.exact);
  }

  TEST_CASE("kernel dimension matches the brute-force count") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(-3, 3);
    for (int t = 0; t < 20; ++t) {
      std::vector<int> l(1 + t % 3);
      for (auto& v : l)
        do v = pick(rng);
        while (v == 0);
      const auto recs = enumerate_resonances(integer_spectrum(l), 5);
      for (unsigned m = 2; m <= 5; ++m) {
        const auto expected = brute_force_resonances(l, m);
        CHECK(resonant_subspace(diag(l), m).kernel.size() == expected);
        CHECK(static_cast<std::size_t>(std::count_if(recs.begin(), recs.end(), [&](const ResonanceRecord& r) {
                return r.degree == m;
              })) == expected);
      }
    }
  }
}
