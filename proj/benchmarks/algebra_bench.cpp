#include <benchmark/benchmark.h>

#include <random>

#include "pdnf/pdnf.hpp"

using namespace pdnf;

namespace {

Polynomial dense(std::size_t n, unsigned deg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-9, 9);
  Polynomial p(n);
  for (unsigned m = 1; m <= deg; ++m)
    for (const auto& mono : monomials_of_degree(n, m)) p.add_term(mono, Rational(c(rng), 1 + (c(rng) + 9) % 4));
  return p;
}

// (x^2 + y)^3-style maps push a linear field through a triangular change of
// coordinates; cost is dominated by substitution and series inversion.
std::vector<Polynomial> triangular_map(std::size_t n) {
  std::vector<Polynomial> phi;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = Polynomial::variable(n, i);
    if (i + 1 < n) {
      auto q = Polynomial::variable(n, i + 1);
      p += multiply(q, q, 8);
    }
    phi.push_back(p);
  }
  return phi;
}

}  // namespace

static void BM_Multiply(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto k = static_cast<unsigned>(st.range(1));
  const auto a = dense(n, k / 2, 1), b = dense(n, k / 2, 2);
  for (auto _ : st) benchmark::DoNotOptimize(multiply(a, b, k));
}
BENCHMARK(BM_Multiply)->Args({2, 8})->Args({3, 8})->Args({3, 12});

static void BM_LieBracket(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto k = static_cast<unsigned>(st.range(1));
  std::vector<Polynomial> fa, fb;
  for (std::size_t i = 0; i < n; ++i) {
    fa.push_back(dense(n, k, 10 + i));
    fb.push_back(dense(n, k, 20 + i));
  }
  const VectorField a(fa, k), b(fb, k);
  for (auto _ : st) benchmark::DoNotOptimize(lie_bracket(a, b));
}
BENCHMARK(BM_LieBracket)->Args({2, 6})->Args({3, 6})->Args({3, 9});

static void BM_Pushforward(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto k = static_cast<unsigned>(st.range(1));
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = Rational(static_cast<long>(i) + 1);
  const auto f = VectorField::linear(a, k);
  const auto phi = triangular_map(n);
  for (auto _ : st) benchmark::DoNotOptimize(pushforward(f, phi, k));
}
BENCHMARK(BM_Pushforward)->Args({2, 8})->Args({3, 8})->Args({3, 12});

static void BM_InvertMap(benchmark::State& st) {
  const auto k = static_cast<unsigned>(st.range(0));
  const auto phi = triangular_map(3);
  for (auto _ : st) benchmark::DoNotOptimize(invert_map(phi, k));
}
BENCHMARK(BM_InvertMap)->Arg(6)->Arg(10);

static void BM_SnDecompose(benchmark::State& st) {
  const auto n = static_cast<std::size_t>(st.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c(rng);
  for (auto _ : st) benchmark::DoNotOptimize(sn_decompose(m));
}
BENCHMARK(BM_SnDecompose)->DenseRange(2, 6, 2);
