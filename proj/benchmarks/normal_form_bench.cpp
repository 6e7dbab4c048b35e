#include <benchmark/benchmark.h>

#include "pdnf/pdnf.hpp"

using namespace pdnf;

namespace {

// x' = x, y' = 3y - x^2: the smallest field with a cancelled resonance.
VectorField small_field(unsigned k) {
  Polynomial dy = Polynomial::variable(2, 1) * Rational(3);
  dy.add_term(Monomial{2, 0}, Rational(-1));
  return VectorField({Polynomial::variable(2, 0), dy}, k);
}

}  // namespace

static void BM_AdMatrixRref(benchmark::State& st) {
  const auto m = static_cast<unsigned>(st.range(0));
  const Matrix a{{1, 0, 0}, {0, -3, 0}, {0, 0, 9}};
  for (auto _ : st) benchmark::DoNotOptimize(rref_kernel_image(ad_matrix(a, m)));
}
BENCHMARK(BM_AdMatrixRref)->DenseRange(3, 9, 3);

static void BM_NormalForm(benchmark::State& st) {
  const auto k = static_cast<unsigned>(st.range(0));
  const auto f = small_field(k);
  for (auto _ : st) benchmark::DoNotOptimize(normal_form(f, k));
}
BENCHMARK(BM_NormalForm)->Arg(5)->Arg(8)->Arg(12);

static void BM_FindSymmetry(benchmark::State& st) {
  const auto k = static_cast<unsigned>(st.range(0));
  const auto f = small_field(k);
  for (auto _ : st) benchmark::DoNotOptimize(find_symmetry(f, Matrix::identity(2), k));
}
BENCHMARK(BM_FindSymmetry)->Arg(5)->Arg(8)->Arg(12);

static void BM_BrunoOmega(benchmark::State& st) {
  const auto eig = exact_spectrum({Gaussian(Rational(1, 2), 1), Gaussian(Rational(1, 2), -1), Gaussian(2)});
  for (auto _ : st) benchmark::DoNotOptimize(bruno_omega(eig, static_cast<unsigned>(st.range(0)), 40));
}
BENCHMARK(BM_BrunoOmega)->Arg(4)->Arg(6);
