#include "bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "mmipm/baseline.hpp"
#include "mmipm/diagnostics.hpp"
#include "mmipm/ms_ipm.hpp"

namespace mmipm::cli {

namespace {

double fit_loglog_slope(const std::map<std::size_t, std::pair<double, std::size_t>>& by_n) {
    // Least squares on (log n, log mean-iters-per-phase).
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double m = static_cast<double>(by_n.size());
    for (const auto& [n, acc] : by_n) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(acc.first / static_cast<double>(acc.second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

BenchReport run_bench(const BenchOptions& opts) {
    if (opts.families.empty()) throw std::invalid_argument("bench: no families given");
    if (opts.seeds.empty()) throw std::invalid_argument("bench: no seeds given");
    {
        std::map<std::size_t, int> distinct;
        for (std::size_t n : opts.sizes) distinct[n] = 1;
        if (distinct.size() < 4)
            throw std::invalid_argument("bench: need >=4 sizes for the exponent fit");
    }

    struct Job {
        Family family;
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (Family f : opts.families)
        for (std::size_t n : opts.sizes)
            for (std::uint64_t s : opts.seeds) jobs.push_back({f, n, s});

    BenchReport report;
    report.rows.resize(jobs.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            const Job& job = jobs[i];

            InstanceSpec spec;
            spec.family = job.family;
            spec.n = job.n;
            spec.seed = job.seed;
            spec.gamma = opts.gamma;
            spec.density = opts.density > 0.0
                               ? opts.density
                               : std::min(1.0, 6.0 / static_cast<double>(job.n));
            spec.b_mode = BMode::Zero;
            const Instance inst = generate(spec);

            const auto t0 = std::chrono::steady_clock::now();
            const ScalingResult adaptive = ms_solve(inst.a, opts.config.epsilon, opts.config);
            const auto t1 = std::chrono::steady_clock::now();
            const ScalingResult fixed = shortstep_ms(inst.a, adaptive.final_mu, opts.config);

            BenchRow row;
            row.family = family_name(job.family);
            row.n = inst.a.n();
            row.seed = job.seed;
            row.iters_adaptive = adaptive.trace.size();
            row.iters_baseline = fixed.trace.size();
            row.phases = summarize_phases(adaptive.trace).size();
            row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            report.rows[i] = std::move(row);
        }
    };

    const std::size_t nthreads = std::max<std::size_t>(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // n can shrink for the ER family (largest component); group by the
    // requested size so seeds aggregate.
    std::map<std::size_t, std::pair<double, std::size_t>> adaptive_by_n, baseline_by_n;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const BenchRow& r = report.rows[i];
        if (r.phases == 0) continue;
        adaptive_by_n[jobs[i].n].first +=
            static_cast<double>(r.iters_adaptive) / static_cast<double>(r.phases);
        adaptive_by_n[jobs[i].n].second += 1;
        baseline_by_n[jobs[i].n].first +=
            static_cast<double>(r.iters_baseline) / static_cast<double>(r.phases);
        baseline_by_n[jobs[i].n].second += 1;
    }
    report.fitted_exponent = fit_loglog_slope(adaptive_by_n);
    report.fitted_exponent_baseline = fit_loglog_slope(baseline_by_n);
    return report;
}

void write_bench_csv(const BenchReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "family,n,seed,iters_adaptive,iters_baseline,phases,wall_ms\n";
    char buf[64];
    for (const BenchRow& r : report.rows) {
        std::snprintf(buf, sizeof(buf), "%.17g", r.wall_ms);
        out << r.family << ',' << r.n << ',' << r.seed << ',' << r.iters_adaptive << ','
            << r.iters_baseline << ',' << r.phases << ',' << buf << "\n";
    }
}

}  // namespace mmipm::cli
