#include <benchmark/benchmark.h>

#include <cmath>
#include <thread>

#include "nlbox/decompose.hpp"
#include "nlbox/measures.hpp"
#include "nlbox/random.hpp"
#include "nlbox/simulate.hpp"

using namespace nlbox;

static void BM_MinCommCostRandomMixture(benchmark::State& state) {
  Rng rng(1);
  std::vector<CorrelationBox> boxes;
  for (int i = 0; i < 64; ++i) boxes.push_back(random_one_bit_mixture(rng).box);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(min_comm_cost(boxes[i++ % boxes.size()]).cost);
}
BENCHMARK(BM_MinCommCostRandomMixture);

static void BM_MinCommCostQuantumChsh(benchmark::State& state) {
  const double e = 1.0 / std::sqrt(2.0);
  const auto box = CorrelationBox::from_correlators({e, e, e, -e});
  for (auto _ : state) benchmark::DoNotOptimize(min_comm_cost(box).cost);
}
BENCHMARK(BM_MinCommCostQuantumChsh);

static void BM_Measure(benchmark::State& state) {
  Rng rng(2);
  const auto box = random_one_bit_mixture(rng).box;
  for (auto _ : state) benchmark::DoNotOptimize(measure(box));
}
BENCHMARK(BM_Measure);

static void BM_SimulateSinglet(benchmark::State& state) {
  const auto spec = ResourceSpec::pair(1, 0.7);
  const auto x = Direction::in_plane(0.0);
  const auto y = Direction::in_plane(1.0);
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_singlet(spec, x, y, trials, 42, workers));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateSinglet)
    ->Args({1 << 16, 1})
    ->Args({1 << 20, 1})
    ->Args({1 << 20, static_cast<long>(std::max(1u, std::thread::hardware_concurrency()))})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
