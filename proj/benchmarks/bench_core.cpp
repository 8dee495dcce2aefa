#include <benchmark/benchmark.h>

#include "kdp/kernel_groups.hpp"
#include "kdp/presentation_area.hpp"
#include "kdp/subgroup_metrics.hpp"

using namespace kdp;

static void BM_AreaCommutator(benchmark::State& state) {
  auto p = commutator_presentation();
  int n = static_cast<int>(state.range(0));
  auto w = commutator(word_power(Word{1}, n), word_power(Word{2}, n));
  for (auto _ : state) {
    auto r = area_search(p, w);
    benchmark::DoNotOptimize(r.area);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}
BENCHMARK(BM_AreaCommutator)->DenseRange(1, 4);

static void BM_AreaPlain(benchmark::State& state) {
  auto p = commutator_presentation();
  auto w = commutator(Word{1, 1}, Word{2, 2});
  SearchBudget b;
  b.plain = true;
  for (auto _ : state) {
    auto r = area_search(p, w, b);
    benchmark::DoNotOptimize(r.area);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}
BENCHMARK(BM_AreaPlain);

static void BM_Ball(benchmark::State& state) {
  auto s = standard_generators(KernelGroup(2, 2, 2));
  for (auto _ : state) {
    auto b = ball(s, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(b.distance.size());
  }
}
BENCHMARK(BM_Ball)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Rewrite(benchmark::State& state) {
  KernelGroup g(3, 2, 2);
  auto e = random_kernel_element(g, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto w = rewrite_in_generators(g, e);
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(BM_Rewrite)->RangeMultiplier(4)->Range(4, 256);

static void BM_Distance(benchmark::State& state) {
  auto s = standard_generators(KernelGroup(2, 2, 2));
  auto h = h_family(2);
  for (auto _ : state) {
    auto d = distance(s, h, 8);
    benchmark::DoNotOptimize(d.found);
  }
}
BENCHMARK(BM_Distance)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
