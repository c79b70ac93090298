#include <benchmark/benchmark.h>

#include "dhb/bergman.hpp"
#include "dhb/debranges.hpp"
#include "dhb/dirichlet.hpp"

namespace {

void DiskIntegration(benchmark::State& state) {
    const dhb::DiskRule rule(int(state.range(0)), 512);
    for (auto _ : state) {
        double v = dhb::integrate_disk_real(
            [](dhb::Complex z) { return 2.0 * std::log(1.0 / std::abs(z)); }, rule);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(DiskIntegration)->RangeMultiplier(2)->Range(50, 400)->Complexity();

void PairFromPhi(benchmark::State& state) {
    const dhb::RationalFn phi(dhb::ComplexPoly::monomial(1),
                              dhb::ComplexPoly({dhb::Complex(1.0), dhb::Complex(-1.0)}),
                              dhb::PoleCheck::open_disk);
    for (auto _ : state) {
        auto pair = dhb::PairBA::from_phi(phi, int(state.range(0)), 128);
        benchmark::DoNotOptimize(pair.a0());
    }
}
BENCHMARK(PairFromPhi)->RangeMultiplier(2)->Range(1024, 8192);

void FPlusSolve(benchmark::State& state) {
    const auto pair = dhb::PairBA::closed_form(dhb::Complex(0.5), 4096, int(state.range(0)));
    const auto f = dhb::cauchy_kernel(dhb::Complex(0.6, 0.3), int(state.range(0)));
    for (auto _ : state) {
        auto g = dhb::f_plus(f, pair, int(state.range(0)));
        benchmark::DoNotOptimize(g.coeff(0));
    }
}
BENCHMARK(FPlusSolve)->RangeMultiplier(2)->Range(64, 512);

void MomentTable(benchmark::State& state) {
    const auto w = dhb::Weight::superharmonic(dhb::AtomicMeasure::dirac(dhb::Complex(0.5)));
    const dhb::DiskRule rule(400, 64);
    for (auto _ : state) {
        dhb::WeightMoments mom(w, rule, int(state.range(0)));
        benchmark::DoNotOptimize(mom.moment(0, 0));
    }
}
BENCHMARK(MomentTable)->RangeMultiplier(2)->Range(32, 256);

void LocalDirichlet(benchmark::State& state) {
    const dhb::RationalFn k(dhb::ComplexPoly::constant(1.0),
                            dhb::ComplexPoly({dhb::Complex(1.0), dhb::Complex(-0.7)}));
    for (auto _ : state) {
        auto v = dhb::local_dirichlet(k, dhb::Complex(0.5), int(state.range(0)));
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(LocalDirichlet)->RangeMultiplier(2)->Range(512, 8192);

}  // namespace

BENCHMARK_MAIN();
