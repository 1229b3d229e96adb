#include <benchmark/benchmark.h>

#include "weylchar/multiplicity.hpp"
#include "weylchar/symfunc.hpp"

using namespace weylchar;

namespace {

void BM_BetaRowChain(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto bound = ShapeBound::uniform(2, n);
  const auto all = enumerate_multipartitions(n, bound);
  for (auto _ : state)
    for (const auto& mu : all) benchmark::DoNotOptimize(beta_chain(all.front(), mu, bound));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_BetaRowChain)->DenseRange(3, 6);

void BM_BetaSingular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto bound = ShapeBound::uniform(2, n);
  const auto all = enumerate_multipartitions(n, bound);
  for (auto _ : state)
    for (const auto& mu : all) benchmark::DoNotOptimize(beta_singular(all.front(), mu, bound));
}
BENCHMARK(BM_BetaSingular)->DenseRange(3, 5);

void BM_BuildMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const unsigned jobs = static_cast<unsigned>(state.range(1));
  const auto bound = ShapeBound::uniform(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_beta_matrix(n, bound, BetaMethod::chain, jobs));
}
BENCHMARK(BM_BuildMatrix)->ArgsProduct({{3, 4, 5}, {1, 4}})->Unit(benchmark::kMillisecond);

void BM_CCoeffs(benchmark::State& state) {
  const auto la = MultiPartition({Partition({2, 1}), Partition({1})});
  const auto mu = MultiPartition({Partition({1}), Partition({2})});
  stable_basis(7, 2);
  for (auto _ : state) benchmark::DoNotOptimize(c_coeffs(la, mu));
}
BENCHMARK(BM_CCoeffs)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
