#include <random>

#include <benchmark/benchmark.h>

#include "sigrho/transforms.hpp"

namespace {

using namespace sigrho;

void BM_Dft(benchmark::State& state) {
  const auto r = static_cast<std::uint64_t>(state.range(0));
  const std::vector<std::uint64_t> orders{r};
  const PrimeField field = choose_prime(orders, std::uint64_t{1} << 61);
  std::mt19937_64 rng(r);
  std::vector<Fp> seq(r);
  for (auto& x : seq) x = field.reduce(rng());
  const Fp omega = field.root(r);
  for (auto _ : state) benchmark::DoNotOptimize(dft(seq, field, omega, Direction::forward));
}

void BM_PlanConvolve(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<Dim> dims(k, Dim{3, DimKind::cyclic});
  dims.push_back(Dim{static_cast<std::size_t>(k + 1), DimKind::linear});
  std::vector<std::uint64_t> orders{3, padded_linear_size(k + 1)};
  const PrimeField field = choose_prime(orders, std::uint64_t{1} << 61);
  ConvolutionPlan plan(dims, field);
  std::mt19937_64 rng(k);
  std::vector<Fp> f(plan.volume()), g(plan.volume()), out(plan.volume());
  for (auto& x : f) x = field.reduce(rng());
  for (auto& x : g) x = field.reduce(rng());
  for (auto _ : state) {
    plan.convolve(f, g, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_Dft)->Arg(64)->Arg(1024)->Arg(1 << 14)->Arg(3)->Arg(27);
BENCHMARK(BM_PlanConvolve)->DenseRange(2, 8, 2);
