// Serial reference vs OpenMP kernels. Run with --benchmark_filter to pick a kernel.
#include <benchmark/benchmark.h>

#include "multipole/cyclic.hpp"
#include "multipole/io.hpp"
#include "multipole/search.hpp"

using namespace multipole;

namespace {

SimpleGraph graph(const char* name) {
  return io::read_graph_file(std::string(MULTIPOLE_DATA_DIR) + "/graphs/" + name + ".g6").front().graph;
}

// Arguments: k, g, s, order, backend (0 serial, 1 parallel).
void BM_generate(benchmark::State& state) {
  search::SearchParams p;
  p.k = static_cast<int>(state.range(0));
  p.g = static_cast<int>(state.range(1));
  p.s = static_cast<int>(state.range(2));
  p.workers = 0;
  const int n = static_cast<int>(state.range(3));
  const auto backend = state.range(4) ? search::Backend::Parallel : search::Backend::Serial;
  long long classes = 0, nodes = 0;
  for (auto _ : state) {
    nodes = 0;
    classes = search::generate(p, n, backend, [](const Multipole&) {}, &nodes);
    benchmark::DoNotOptimize(classes);
  }
  state.counters["classes"] = static_cast<double>(classes);
  state.counters["nodes"] = static_cast<double>(nodes);
  state.SetLabel(state.range(4) ? "parallel" : "serial");
}
BENCHMARK(BM_generate)
    ->Args({3, 6, 0, 14, 0})->Args({3, 6, 0, 14, 1})
    ->Args({3, 7, 0, 24, 0})->Args({3, 7, 0, 24, 1})
    ->Args({4, 5, 10, 10, 0})->Args({4, 5, 10, 10, 1})
    ->Unit(benchmark::kMillisecond);

const char* const cages[] = {"petersen", "heawood", "mcgee", "tutte_coxeter", "robertson"};

// Arguments: cage index, workers (1 serial).
void BM_cyclic_connectivity(benchmark::State& state) {
  const SimpleGraph g = graph(cages[state.range(0)]);
  cyclic::Options opt;
  opt.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::cyclic_edge_connectivity(g, opt).value);
  state.SetLabel(std::string(cages[state.range(0)]) + (opt.workers == 1 ? " serial" : " parallel"));
}
BENCHMARK(BM_cyclic_connectivity)->ArgsProduct({{0, 1, 2, 3, 4}, {1, 0}})->Unit(benchmark::kMicrosecond);

void BM_all_min_cuts(benchmark::State& state) {
  const SimpleGraph g = graph(cages[state.range(0)]);
  std::size_t count = 0;
  for (auto _ : state) count = cyclic::all_min_cycle_separating_cuts(g).size();
  state.counters["cuts"] = static_cast<double>(count);
  state.SetLabel(cages[state.range(0)]);
}
BENCHMARK(BM_all_min_cuts)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_partition_oracle(benchmark::State& state) {
  const SimpleGraph g = graph(cages[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cyclic::partition_oracle(g));
  state.SetLabel(cages[state.range(0)]);
}
BENCHMARK(BM_partition_oracle)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
