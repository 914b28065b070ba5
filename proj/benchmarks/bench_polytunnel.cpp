#include <benchmark/benchmark.h>

#include "polytunnel/lattice_oracle.hpp"
#include "polytunnel/scattering.hpp"
#include "polytunnel/zeno_time.hpp"

using namespace polytunnel;

namespace {

PhysicalParams point(int n) {
    return validate_params({constants::electron_mass_ev_fs2_nm2, 5.5, 9.7, 1.0, n});
}

}  // namespace

static void BM_ComputeDispersion(benchmark::State& state) {
    const PhysicalParams p = point(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_dispersion(p));
    }
}
BENCHMARK(BM_ComputeDispersion);

static void BM_SolveBoundarySystem(benchmark::State& state) {
    const DispersionParams d = compute_dispersion(point(10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_boundary_system(d, 10));
    }
}
BENCHMARK(BM_SolveBoundarySystem);

static void BM_PaperCoefficients(benchmark::State& state) {
    const DispersionParams d = compute_dispersion(point(10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(paper_coefficients(d, 10));
    }
}
BENCHMARK(BM_PaperCoefficients);

static void BM_LatticeRecursion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const DispersionParams d = compute_dispersion(point(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lattice_recursion_scatter(d, n));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LatticeRecursion)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

static void BM_TunnelingTime(benchmark::State& state) {
    const PhysicalParams p = point(10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tunneling_time(p));
    }
}
BENCHMARK(BM_TunnelingTime);

static void BM_SweepMu0(benchmark::State& state) {
    SweepSpec spec;
    spec.mass = constants::electron_mass_ev_fs2_nm2;
    spec.energy = 5.5;
    spec.barrier_height = 9.7;
    spec.barrier_width = 1.0;
    spec.n_min = 8;
    spec.n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_mu0(spec));
    }
}
BENCHMARK(BM_SweepMu0)->Arg(40)->Arg(120);

BENCHMARK_MAIN();
