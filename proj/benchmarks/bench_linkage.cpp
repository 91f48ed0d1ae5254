#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "hac/linkage.hpp"
#include "hac/market.hpp"
#include "hac/metric.hpp"
#include "hac/set_distance.hpp"

namespace {

hac::DistanceMatrix cloud(std::size_t n) {
    std::mt19937_64 rng(n);
    std::normal_distribution<double> g;
    std::vector<hac::Point> pts(n);
    for (auto& p : pts) p.coords = {g(rng), g(rng)};
    return hac::build_distance_matrix(pts);
}

template <hac::Linkage L>
void BM_Agglomerate(benchmark::State& state) {
    const auto d = cloud(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(hac::agglomerate(d, L));
    state.SetComplexityN(state.range(0));
}

void BM_HausdorffSetDistance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = cloud(2 * n);
    std::vector<std::size_t> a, b;
    for (std::size_t i = 0; i < n; ++i) {
        a.push_back(i);
        b.push_back(n + i);
    }
    const hac::IndexSet sa(a), sb(b);
    for (auto _ : state) benchmark::DoNotOptimize(hac::hausdorff_distance(sa, sb, d));
}

void BM_CorrelationMatrix(benchmark::State& state) {
    const auto table = hac::synthetic_price_table(static_cast<std::size_t>(state.range(0)), 1998, hac::djia_tickers());
    const auto returns = hac::table_returns(table);
    for (auto _ : state) benchmark::DoNotOptimize(hac::build_distance_matrix(returns));
}

}  // namespace

BENCHMARK(BM_Agglomerate<hac::Linkage::single>)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_Agglomerate<hac::Linkage::complete>)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_Agglomerate<hac::Linkage::hausdorff>)->RangeMultiplier(2)->Range(32, 512)->Complexity();
BENCHMARK(BM_HausdorffSetDistance)->Range(8, 512);
BENCHMARK(BM_CorrelationMatrix)->Arg(253)->Arg(2530);

BENCHMARK_MAIN();
