#include <benchmark/benchmark.h>

#include <random>

#include "conic/tpoly.hpp"

using namespace conic;

static void BM_SolvePoisson(benchmark::State& state) {
  const ConeParam p(Rational(3, 4), static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<FPolynomial> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_t_polynomial(p, rng, Rational(6), 4));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_poisson(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_SolvePoisson)->Arg(0)->Arg(1)->Arg(2);

static void BM_Multiply(benchmark::State& state) {
  const ConeParam p(Rational(1, 2), 1);
  std::mt19937_64 rng(2);
  const FPolynomial a = random_t_polynomial(p, rng, Rational(4), 2, 8);
  const FPolynomial b = random_t_polynomial(p, rng, Rational(4), 2, 8);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_Multiply);
