// Serial reference against the OpenMP kernels. Thread count follows
// CUBESEC_THREADS / OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "cubesec/kernels.hpp"
#include "cubesec/random.hpp"

namespace {

using namespace cubesec;

std::vector<Frame> batch(int n, int k, int count) {
  Rng rng = make_rng(2024, static_cast<std::uint64_t>(n * 16 + k));
  std::vector<Frame> frames;
  for (int i = 0; i < count; ++i) frames.push_back(random_tight_frame(n, k, rng));
  return frames;
}

detail::SlabSystem<double> slabs(const Frame& s) {
  detail::SlabSystem<double> sys;
  sys.dim = s.k();
  for (int i = 0; i < s.n(); ++i) {
    for (int j = 0; j < s.k(); ++j) sys.rows.push_back(s.matrix()(j, i));
    sys.two_sided.push_back(1);
  }
  return sys;
}

template <bool Parallel>
void volumes(benchmark::State& state) {
  const auto frames = batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 256);
  for (auto _ : state) {
    auto v = Parallel ? kernels::section_volumes_parallel(frames) : kernels::section_volumes_serial(frames);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(frames.size()));
}

template <bool Parallel>
void vertices(benchmark::State& state) {
  const auto sys = slabs(batch(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 1)[0]);
  const detail::FloatPolicy pol;
  for (auto _ : state) {
    auto v = Parallel ? kernels::vertex_candidates_parallel(sys, pol)
                      : kernels::vertex_candidates_serial(sys, pol);
    benchmark::DoNotOptimize(v.data());
  }
}

void shapes(benchmark::internal::Benchmark* b) {
  for (auto [n, k] : {std::pair{6, 2}, {10, 2}, {7, 3}, {7, 4}}) b->Args({n, k});
}

BENCHMARK(volumes<false>)->Name("section_volumes/serial")->Apply(shapes)->Unit(benchmark::kMillisecond);
BENCHMARK(volumes<true>)->Name("section_volumes/parallel")->Apply(shapes)->Unit(benchmark::kMillisecond);
BENCHMARK(vertices<false>)->Name("vertex_candidates/serial")->Apply(shapes)->Unit(benchmark::kMicrosecond);
BENCHMARK(vertices<true>)->Name("vertex_candidates/parallel")->Apply(shapes)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
