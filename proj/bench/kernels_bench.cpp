// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "srg/eigenbasis3.hpp"
#include "srg/exact_linalg.hpp"
#include "srg/kernels.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/modular.hpp"
#include "srg/permutohedra.hpp"
#include "srg/spectral_analysis.hpp"

using namespace srg;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::parallel : Execution::serial; }

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_BareissRank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(1)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, mode(state)));
}
BENCHMARK(BM_BareissRank)->ArgsProduct({{0, 1}, {60, 120}})->Unit(benchmark::kMillisecond);

void BM_AdjacencyGather(benchmark::State& state) {
  const SRGraph g(4, static_cast<int>(state.range(1)));
  std::vector<Coeff> in(g.size()), out(g.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = static_cast<Coeff>(i % 13) - 6;
  for (auto _ : state) {
    kernels::adjacency_gather(g, in, out, mode(state));
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_AdjacencyGather)->ArgsProduct({{0, 1}, {20, 40}})->Unit(benchmark::kMicrosecond);

void BM_Annihilator(benchmark::State& state) {
  const auto q = spectral::quotient_matrix(4, static_cast<int>(state.range(1)));
  std::vector<long> roots;
  for (long l = -6; l <= 3L * state.range(1); ++l) roots.push_back(l);
  for (auto _ : state) benchmark::DoNotOptimize(modular::check_annihilator(q.entries, roots, mode(state)));
}
BENCHMARK(BM_Annihilator)->ArgsProduct({{0, 1}, {16, 24}})->Unit(benchmark::kMillisecond);

void BM_IntegralSpectrum(benchmark::State& state) {
  const SRGraph g(3, static_cast<int>(state.range(1)));
  for (auto _ : state)
    benchmark::DoNotOptimize(spectral::integral_spectrum(g, spectral::Screen::float_screen, mode(state)));
}
BENCHMARK(BM_IntegralSpectrum)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);

void BM_PermutohedronFamily(benchmark::State& state) {
  const SRGraph g(5, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(perm::verify_permutohedron_family(g, mode(state)));
}
BENCHMARK(BM_PermutohedronFamily)->ArgsProduct({{0, 1}, {14, 18}})->Unit(benchmark::kMillisecond);

void BM_Eigenbasis(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(eigen3::full_eigenbasis(static_cast<int>(state.range(1)), eigen3::kExactRankLimit, mode(state)));
}
BENCHMARK(BM_Eigenbasis)->ArgsProduct({{0, 1}, {20, 36}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
