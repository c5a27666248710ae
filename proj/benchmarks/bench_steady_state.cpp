#include <benchmark/benchmark.h>

#include "cqad/lindblad.hpp"
#include "cqad/steady_state.hpp"

using namespace cqad;

namespace {

DeviceParams resonant(int cutoff)
{
    DeviceParams p;
    p.gamma_q = 7.9;
    p.fock_cutoff = cutoff;
    return p;
}

void BM_FamilyBuild(benchmark::State& state)
{
    const DeviceParams p = resonant(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(LiouvillianFamily(p, p.omega_r));
}
BENCHMARK(BM_FamilyBuild)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SteadyStateSolve(benchmark::State& state)
{
    const DeviceParams p = resonant(static_cast<int>(state.range(0)));
    const LiouvillianFamily family(p, p.omega_r);
    SteadyStateSolver solver;
    double wp = p.omega_r - 30.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solver.solve(family.at(wp)));
        wp += 0.15;
    }
}
BENCHMARK(BM_SteadyStateSolve)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Spectrum41(benchmark::State& state)
{
    const DeviceParams p = resonant(10);
    const auto grid = linspace(p.omega_r - 30.0, p.omega_r + 30.0, 41);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum(p, p.omega_r, grid, {1, false}));
}
BENCHMARK(BM_Spectrum41)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
