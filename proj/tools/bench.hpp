#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmipm/config.hpp"
#include "mmipm/instances.hpp"

namespace mmipm::cli {

struct BenchRow {
    std::string family;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t iters_adaptive = 0;
    std::size_t iters_baseline = 0;
    std::size_t phases = 0;
    double wall_ms = 0.0;  // adaptive solver wall time
};

struct BenchReport {
    std::vector<BenchRow> rows;
    double fitted_exponent = 0.0;           // adaptive iterations-per-phase vs n
    double fitted_exponent_baseline = 0.0;  // same fit for the short-step baseline
};

struct BenchOptions {
    std::vector<Family> families;
    std::vector<std::size_t> sizes;  // needs >= 4 distinct values for the fit
    std::vector<std::uint64_t> seeds;
    double gamma = 0.1;
    double density = 0.0;  // 0 = auto (mean degree 6)
    std::size_t threads = 1;
    SolverConfig config;
};

// Runs the adaptive scaling solver to the configured epsilon on each
// instance, then the fixed short-step baseline to the same final mu, and fits
// log(mean iterations per doubling phase) against log n. Instances may run in
// parallel; rows come back in spec order.
BenchReport run_bench(const BenchOptions& opts);

void write_bench_csv(const BenchReport& report, const std::string& path);

}  // namespace mmipm::cli
