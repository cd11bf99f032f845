#include <benchmark/benchmark.h>

#include "ribbonforge/canonical.hpp"
#include "ribbonforge/enumeration.hpp"
#include "ribbonforge/link_bridge.hpp"
#include "ribbonforge/minors.hpp"

using namespace ribbonforge;

static void BM_CanonicalKey(benchmark::State& state) {
  const auto g = random_ribbon_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g, g.edge_count()));
}
BENCHMARK(BM_CanonicalKey)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_EnumerateAll(benchmark::State& state) {
  EnumerationFilter f;
  f.max_edges = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(f).size());
}
BENCHMARK(BM_EnumerateAll)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_HasMinorB3(benchmark::State& state) {
  const auto g = build_B(static_cast<std::size_t>(state.range(0)));
  const auto b3 = build_B(3);
  SearchLimits limits;
  limits.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(has_minor(g, b3, limits));
}
BENCHMARK(BM_HasMinorB3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_RepresentsLink(benchmark::State& state) {
  const auto g = random_ribbon_graph(static_cast<std::size_t>(state.range(0)), 11);
  RepresentOptions options{false, {}};
  options.limits.max_edges = g.edge_count();
  for (auto _ : state) benchmark::DoNotOptimize(represents_link(g, options).representable);
}
BENCHMARK(BM_RepresentsLink)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
