#include <benchmark/benchmark.h>

#include "lcalc/corpus.hpp"
#include "lcalc/twists.hpp"

using namespace lcalc;

namespace {

void BM_ScalarMultiply(benchmark::State& state) {
  auto f = Field::make(static_cast<unsigned>(state.range(0)), 5);
  const Scalar a = parse_scalar("1/2 + 3*z - c*z^2", f);
  const Scalar b = parse_scalar("-2/3*c + z^3 + 5", f);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_ScalarInverse(benchmark::State& state) {
  auto f = Field::make(static_cast<unsigned>(state.range(0)), 5);
  const Scalar a = parse_scalar("1/2 + 3*z - c*z^2", f);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ScalarInverse)->Arg(4)->Arg(8)->Arg(12);

void BM_Determinant(benchmark::State& state) {
  auto f = Field::make(4, 5);
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_unimodular(f, n, rng) * Matrix::scalar(Scalar::sqrt_q(f), n);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 8, 2);

void BM_IsotypicDecomposition(benchmark::State& state) {
  auto f = Field::make(4, 5);
  const auto real = DualRealization::for_lgroup(LGroupSpec::split({GroupDescriptor::Kind::GL, 3}));
  const RepExpr r = rep_corpus()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(r.to_string());
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_decomposition(r, real, f));
}
BENCHMARK(BM_IsotypicDecomposition)->DenseRange(0, 5);

void BM_Equiv(benchmark::State& state) {
  auto f = Field::make(4, 5);
  const auto n = static_cast<unsigned>(state.range(0));
  const ParamData p = gl_corpus(f, n, 1, 11).front().param;
  Rng rng(2);
  const ParamData moved = conjugate(p, random_unimodular(f, n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(equiv(p, moved));
}
BENCHMARK(BM_Equiv)->DenseRange(2, 4);

void BM_TannakianTwist(benchmark::State& state) {
  auto f = Field::make(4, 5);
  const ParamData p = gl_corpus(f, 3, 1, 12).front().param;
  const RepExpr r = rep_corpus()[static_cast<std::size_t>(state.range(0))];
  const Scalar c = Scalar::sqrt_q(f);
  state.SetLabel(r.to_string());
  for (auto _ : state) benchmark::DoNotOptimize(tannakian_twist(p, r, c));
}
BENCHMARK(BM_TannakianTwist)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();
