#include <benchmark/benchmark.h>

#include "cliffgrass/cohomology.hpp"
#include "cliffgrass/linalg.hpp"

namespace {

using namespace cliffgrass::cohomology;

void BM_HilbertSliceDegree32(benchmark::State& state) {
    const auto space = builtin_presentation(SpaceId::gr8r16);
    const auto& variant = space.presentations[1].second;
    for (auto _ : state) {
        const DegreeSlice slice = degree_slice(variant, 32);
        cliffgrass::RowEchelon ech(slice.monomials.size());
        for (const auto& row : slice.ideal_rows) ech.insert(row);
        benchmark::DoNotOptimize(ech.dimension());
    }
}
BENCHMARK(BM_HilbertSliceDegree32)->Unit(benchmark::kMillisecond);

void BM_Gr8R16FullSeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_space(SpaceId::gr8r16, 32));
    }
}
BENCHMARK(BM_Gr8R16FullSeries)->Unit(benchmark::kMillisecond);

void BM_InvariantSeries(benchmark::State& state) {
    const auto space = builtin_presentation(SpaceId::gr8perp_r16);
    const auto& variant = space.presentations[1].second;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            involution_invariant_series(variant, *space.involution, 32));
    }
}
BENCHMARK(BM_InvariantSeries)->Unit(benchmark::kMillisecond);

void BM_GaussianBinomial(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_binomial(6, 2, 2));
    }
}
BENCHMARK(BM_GaussianBinomial);

}  // namespace

BENCHMARK_MAIN();
