#include <benchmark/benchmark.h>

#include "cliffgrass/linalg.hpp"
#include "cliffgrass/octonion.hpp"
#include "cliffgrass/spin.hpp"

namespace {

using namespace cliffgrass;

void BM_OctonionProduct(benchmark::State& state) {
    const Octonion a = Octonion::basis(4) + Octonion::basis(1);
    const Octonion b = Octonion::basis(6) - Octonion::basis(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_OctonionProduct);

void BM_SpinGeneratorProduct(benchmark::State& state) {
    const Matrix a = spin::build_m_u(Octonion::basis(1));
    const Matrix b = spin::build_m_u(Octonion::basis(4));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SpinGeneratorProduct);

void BM_CliffordAlgebraSpan256(benchmark::State& state) {
    std::vector<Matrix> singles;
    for (std::size_t u = 0; u < 8; ++u) singles.push_back(spin::build_m_u(Octonion::basis(u)));
    std::vector<Matrix> products;
    products.reserve(256);
    for (unsigned mask = 0; mask < 256; ++mask) {
        Matrix p = Matrix::identity(16);
        for (std::size_t u = 0; u < 8; ++u) {
            if (mask & (1u << u)) p = p * singles[u];
        }
        products.push_back(std::move(p));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(span_dimension(products));
    }
}
BENCHMARK(BM_CliffordAlgebraSpan256)->Unit(benchmark::kMillisecond);

void BM_TrialitySolve(benchmark::State& state) {
    const Matrix m = spin::spin8_basis().front().matrix;
    for (auto _ : state) {
        benchmark::DoNotOptimize(spin::triality_companion(m));
    }
}
BENCHMARK(BM_TrialitySolve)->Unit(benchmark::kMillisecond);

}  // namespace
