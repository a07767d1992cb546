#include <random>

#include <benchmark/benchmark.h>

#include "sigrho/joins.hpp"
#include "sigrho/sigma_rho.hpp"

namespace {

using namespace sigrho;

MemoTable<CountPolicy> random_table(std::size_t k, std::size_t s, const PrimeField& field, std::mt19937_64& rng) {
  MemoTable<CountPolicy> t;
  for (std::size_t i = 0; i < k; ++i) t.bag.push_back(static_cast<Vertex>(i));
  t.values.resize(ipow(s, k));
  for (auto& v : t.values) v = field.reduce(rng());
  return t;
}

void run_join(benchmark::State& state, const char* preset, JoinStrategy strategy) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const SigmaRhoSpec spec = SigmaRhoSpec::preset(preset);
  const PrimeField field = choose_prime(transform_orders(spec, k, k), std::uint64_t{1} << 61);
  std::mt19937_64 rng(k);
  const auto left = random_table(k, spec.num_labels(), field, rng);
  const auto right = random_table(k, spec.num_labels(), field, rng);
  const CountPolicy policy{&field};
  FastJoinOptions opts;
  opts.field = &field;
  opts.size_bound = static_cast<std::int32_t>(k);
  for (auto _ : state) {
    switch (strategy) {
      case JoinStrategy::naive: benchmark::DoNotOptimize(naive_join(left, right, spec, policy)); break;
      case JoinStrategy::fast_general:
        benchmark::DoNotOptimize(fast_join_general(left, right, spec, policy, opts));
        break;
      case JoinStrategy::fast_dominating:
        benchmark::DoNotOptimize(fast_join_dominating(left, right, spec, policy, opts));
        break;
    }
  }
  state.counters["entries"] = static_cast<double>(left.values.size());
}

void BM_DsNaive(benchmark::State& s) { run_join(s, "dominating_set", JoinStrategy::naive); }
void BM_DsFastGeneral(benchmark::State& s) { run_join(s, "dominating_set", JoinStrategy::fast_general); }
void BM_DsFastDominating(benchmark::State& s) { run_join(s, "dominating_set", JoinStrategy::fast_dominating); }
void BM_PerfectCodeNaive(benchmark::State& s) { run_join(s, "perfect_code", JoinStrategy::naive); }
void BM_PerfectCodeFast(benchmark::State& s) { run_join(s, "perfect_code", JoinStrategy::fast_general); }

}  // namespace

BENCHMARK(BM_DsNaive)->DenseRange(4, 9);
BENCHMARK(BM_DsFastGeneral)->DenseRange(4, 9);
BENCHMARK(BM_DsFastDominating)->DenseRange(4, 9);
BENCHMARK(BM_PerfectCodeNaive)->DenseRange(3, 7);
BENCHMARK(BM_PerfectCodeFast)->DenseRange(3, 7);
BENCHMARK_MAIN();
