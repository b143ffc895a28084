#include <benchmark/benchmark.h>

#include <random>

#include "crspan/builtins.hpp"
#include "crspan/identity.hpp"
#include "crspan/rigidity.hpp"

using namespace crspan;

namespace {

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<GaussianRational> e(rows * cols);
  for (auto& x : e) x = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return ExactMatrix(rows, cols, std::move(e));
}

void BM_Rank(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = random_matrix(dim, dim, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

void BM_Nullspace(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const ExactMatrix m = random_matrix(dim / 2, dim, 2);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Arg(16)->Arg(32)->Arg(64);

void BM_SphereCheck(benchmark::State& state) {
  const CRMap f = builtin_hst(static_cast<std::size_t>(state.range(0)), Rational(1, 2), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(verify_sphere_map(f));
}
BENCHMARK(BM_SphereCheck)->Arg(2)->Arg(4)->Arg(6);

void BM_DtProfile(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CRMap f = builtin_dt(n, Rational(1, 2));
  const Point p = sample_sphere_point(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy_profile(f, p));
}
BENCHMARK(BM_DtProfile)->Arg(2)->Arg(4)->Arg(6);

void BM_HstAnalyze(benchmark::State& state) {
  const CRMap f = builtin_hst(static_cast<std::size_t>(state.range(0)), Rational(1, 2), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(f, 3, 0));
}
BENCHMARK(BM_HstAnalyze)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_IdentitySolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SharpExample ex = sharp_example(n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_matrix_form(ex.problem));
}
BENCHMARK(BM_IdentitySolve)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ConjugateSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SharpExample ex = sharp_example(n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_conjugate_form(ex.problem));
}
BENCHMARK(BM_ConjugateSolve)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SharpExample ex = sharp_example(n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(ex.problem, ex.solutions));
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
