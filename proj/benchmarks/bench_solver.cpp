#include <benchmark/benchmark.h>

#include "radgps/collocation.hpp"
#include "radgps/operator.hpp"
#include "radgps/oracle.hpp"

using namespace radgps;

namespace {

const CollocationSet& cached_set(int N) {
    static const CollocationSet s250 = build_collocation(250);
    static const CollocationSet s300 = build_collocation(300);
    return N == 250 ? s250 : s300;
}

void bm_build_collocation(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const CollocationSet set = build_collocation(N);
        benchmark::DoNotOptimize(set.d2.data());
    }
}
BENCHMARK(bm_build_collocation)->Arg(150)->Arg(300);

void bm_assemble(benchmark::State& state) {
    const GridSpec g;
    const auto& set = cached_set(g.N);
    const auto p = parse_potential("coulomb Z=12 g=1 lambda=1/32");
    for (auto _ : state) {
        const SymmetricOperator op = assemble(g, set, p, 0);
        benchmark::DoNotOptimize(op.entries.data());
    }
}
BENCHMARK(bm_assemble);

void bm_eigensolve(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const GridSpec g{N, 200.0, 25.0};
    const auto& set = cached_set(N);
    const auto p = parse_potential("coulomb Z=12 g=1 lambda=1/32");
    const SymmetricOperator op = assemble(g, set, p, 0);
    for (auto _ : state) {
        const Spectrum sp = eigen_lowest(op, 10);
        benchmark::DoNotOptimize(sp.states.data());
    }
}
BENCHMARK(bm_eigensolve)->Arg(250)->Arg(300);

void bm_solve_states(benchmark::State& state) {
    const GridSpec g;
    const auto& set = cached_set(g.N);
    const auto p = parse_potential("oscillator a=0.5 b=0.5 c=0.4");
    for (auto _ : state) {
        const Spectrum sp = solve_states(g, set, p, 0, 10);
        benchmark::DoNotOptimize(sp.states.data());
    }
}
BENCHMARK(bm_solve_states);

void bm_shooting_eigenvalue(benchmark::State& state) {
    const auto p = parse_potential("coulomb Z=1 g=0 lambda=0");
    for (auto _ : state) {
        ShootingConfig cfg;
        cfg.steps = 100000;
        cfg.bracket_lo = -0.6;
        cfg.bracket_hi = -0.4;
        benchmark::DoNotOptimize(numerov_eigenvalue(p, 0, cfg, 0));
    }
}
BENCHMARK(bm_shooting_eigenvalue);

} // namespace

BENCHMARK_MAIN();
