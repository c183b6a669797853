#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "triadic/canonical.hpp"
#include "triadic/enumerator.hpp"
#include "triadic/exactmath.hpp"
#include "triadic/topology.hpp"

namespace {

using triadic::DispersionSpec;

void BM_EnumerateSphere(benchmark::State& state) {
  const auto spec = DispersionSpec::sphere();
  for (auto _ : state) {
    benchmark::DoNotOptimize(triadic::enumerate(spec, state.range(0)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateSphere)->RangeMultiplier(2)->Range(125, 1000)->Unit(benchmark::kMillisecond)
    ->Complexity();

void BM_EnumerateChannel(benchmark::State& state) {
  const auto spec = DispersionSpec::channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(triadic::enumerate(spec, state.range(0)));
  }
}
BENCHMARK(BM_EnumerateChannel)->Arg(250)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_CrossReduce(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
  std::vector<std::int64_t> in(4096);
  for (auto& v : in) v = dist(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(triadic::cross_reduce(in[i], in[i + 1], in[i + 2], in[i + 3]));
    i = (i + 4) % in.size();
  }
}
BENCHMARK(BM_CrossReduce);

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000'000'000);
  std::vector<std::int64_t> in(4096);
  for (auto& v : in) v = dist(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(triadic::gcd(in[i], in[i + 1]));
    i = (i + 2) % in.size();
  }
}
BENCHMARK(BM_Gcd);

triadic::SmallGraph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.3);
  triadic::SmallGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_CertificateExhaustive(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(triadic::certificate_exhaustive(g));
}
BENCHMARK(BM_CertificateExhaustive)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_CertificateRefined(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(triadic::certificate_refined(g));
}
BENCHMARK(BM_CertificateRefined)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_TopologySphere1000(benchmark::State& state) {
  const auto set = triadic::enumerate(DispersionSpec::sphere(), 1000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(triadic::classify_components(triadic::build_graphs(set).triads));
  }
}
BENCHMARK(BM_TopologySphere1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
