#include <benchmark/benchmark.h>

#include "mmipm/cg.hpp"
#include "mmipm/instances.hpp"
#include "mmipm/ms_ipm.hpp"
#include "mmipm/qo_ipm.hpp"

namespace {

using namespace mmipm;

Instance grid_instance(std::size_t n) {
    InstanceSpec spec;
    spec.family = Family::GridLaplacian;
    spec.n = n;
    spec.gamma = 0.1;
    spec.seed = 1;
    spec.b_mode = BMode::ScaledRandom;
    return generate(spec);
}

void BM_matvec(benchmark::State& state) {
    const Instance inst = grid_instance(static_cast<std::size_t>(state.range(0)));
    const DenseVector v = ones(inst.a.n());
    DenseVector y(inst.a.n());
    for (auto _ : state) {
        inst.a.matvec(v, y);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_matvec)->Arg(1024)->Arg(16384);

void BM_solve_shifted(benchmark::State& state) {
    const Instance inst = grid_instance(static_cast<std::size_t>(state.range(0)));
    const DenseVector x = ones(inst.a.n());
    const DenseVector r = ones(inst.a.n());
    for (auto _ : state) {
        DenseVector y = solve_shifted(inst.a, x, 1.0, r);
        benchmark::DoNotOptimize(y.data());
    }
}
BENCHMARK(BM_solve_shifted)->Arg(1024)->Arg(4096);

void BM_ms_phase(benchmark::State& state) {
    const Instance inst = grid_instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        const ScalingResult r = ms_solve_to_mu(inst.a, 2.0);
        benchmark::DoNotOptimize(r.final_mu);
    }
}
BENCHMARK(BM_ms_phase)->Arg(256)->Arg(1024);

void BM_qo_line_search(benchmark::State& state) {
    const Instance inst = grid_instance(256);
    const ScalingResult seed = ms_solve_to_mu(inst.a, 4.0);
    IpmState s;
    s.x = seed.x_scaled;
    s.mu = seed.final_mu;
    s.b = inst.a.matvec(ones(inst.a.n()));
    for (double& v : s.b) v -= 1.0;
    for (auto _ : state) {
        const LineSearchResult ls = line_search_delta(s, inst.a, 1.0);
        benchmark::DoNotOptimize(ls.delta);
    }
}
BENCHMARK(BM_qo_line_search);

}  // namespace

BENCHMARK_MAIN();
