#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmipm/baseline.hpp"
#include "mmipm/errors.hpp"
#include "mmipm/matrix_market.hpp"
#include "mmipm/ms_ipm.hpp"
#include "mmipm/qo_ipm.hpp"
#include "mmipm/verify.hpp"

#include "bench.hpp"
#include "config_io.hpp"

namespace {

using namespace mmipm;
using namespace mmipm::cli;

constexpr int kOk = 0;
constexpr int kViolation = 1;  // convergence failure or lemma breach
constexpr int kInputError = 2;

void print_value(const char* name, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::printf("%s = %s\n", name, buf);
}

// Step classification under the configured threshold and, for comparison,
// under the empirical median of rho_l3 / n^(1/3).
void print_step_classification(const std::vector<StepTrace>& trace, std::size_t n,
                               const SolverConfig& cfg) {
    if (trace.empty()) return;
    std::size_t long_cfg = 0;
    std::vector<double> ratios;
    ratios.reserve(trace.size());
    const double n13 = std::cbrt(static_cast<double>(n));
    for (const StepTrace& t : trace) {
        if (t.step_kind == StepKind::Long) ++long_cfg;
        ratios.push_back(t.rho_l3 / n13);
    }
    std::nth_element(ratios.begin(), ratios.begin() + ratios.size() / 2, ratios.end());
    const double median_coeff = ratios[ratios.size() / 2];
    std::size_t long_median = 0;
    for (const StepTrace& t : trace)
        if (classify_step(t.rho_l3, n, median_coeff) == StepKind::Long) ++long_median;
    std::printf("long_steps = %zu of %zu (threshold_coeff %g)\n", long_cfg, trace.size(),
                cfg.threshold_coeff);
    std::printf("long_steps_at_median = %zu of %zu (median coeff %g)\n", long_median,
                trace.size(), median_coeff);
}

struct ScaleArgs {
    std::string matrix_path;
    std::string out_path;
    std::string trace_path;
    double epsilon = 1e-6;
    ConfigArgs config;
};

struct QpArgs {
    std::string matrix_path;
    std::string b_path;
    std::string out_path;
    std::string trace_path;
    double epsilon = 1e-6;
    ConfigArgs config;
};

struct BenchArgs {
    std::vector<std::string> families;
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds{1};
    double epsilon = 1e-6;
    double gamma = 0.1;
    double density = 0.0;
    std::size_t threads = 1;
    std::string out_path = "bench.csv";
    ConfigArgs config;
};

struct VerifyArgs {
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::size_t max_n = 32;
    bool negative_control = false;
};

int run_scale(const ScaleArgs& args) {
    SolverConfig cfg = args.config.resolve();
    cfg.epsilon = args.epsilon;
    const SparseSymMatrix a = read_matrix_market_file(args.matrix_path);

    const ScalingResult result = ms_solve(a, args.epsilon, cfg);

    const std::string out = args.out_path.empty() ? args.matrix_path + ".x" : args.out_path;
    write_vector_file(out, result.x_scaled);
    if (!args.trace_path.empty()) {
        emit_trace(result.trace, args.trace_path);
        write_config_snapshot(cfg, args.trace_path + ".config.json");
    }

    std::printf("n = %zu\n", a.n());
    std::printf("iterations = %zu\n", result.trace.size());
    print_value("final_mu", result.final_mu);
    print_value("residual_l2", result.residual_l2);
    if (!args.trace_path.empty()) print_step_classification(result.trace, a.n(), cfg);
    std::printf("x written to %s\n", out.c_str());
    return result.residual_l2 <= args.epsilon ? kOk : kViolation;
}

int run_qp(const QpArgs& args) {
    SolverConfig cfg = args.config.resolve();
    cfg.epsilon = args.epsilon;
    const SparseSymMatrix a = read_matrix_market_file(args.matrix_path);
    const DenseVector b = read_vector_file(args.b_path);
    if (b.size() != a.n()) throw std::invalid_argument("b dimension does not match the matrix");

    const QoResult result = qo_solve(a, b, args.epsilon, cfg);

    const std::string out = args.out_path.empty() ? args.matrix_path + ".x" : args.out_path;
    write_vector_file(out, result.x);
    if (!args.trace_path.empty()) {
        emit_trace(result.trace, args.trace_path);
        write_config_snapshot(cfg, args.trace_path + ".config.json");
    }

    std::printf("n = %zu\n", a.n());
    std::printf("iterations = %zu\n", result.trace.size());
    print_value("final_mu", result.final_mu);
    print_value("objective", result.objective);
    print_value("gap_bound", result.duality_gap_bound);
    if (!args.trace_path.empty()) print_step_classification(result.trace, a.n(), cfg);
    std::printf("x written to %s\n", out.c_str());
    return result.duality_gap_bound <= args.epsilon ? kOk : kViolation;
}

int run_bench_cmd(const BenchArgs& args) {
    BenchOptions opts;
    for (const std::string& name : args.families) {
        Family f;
        if (!parse_family(name, f)) throw std::invalid_argument("unknown family '" + name + "'");
        opts.families.push_back(f);
    }
    opts.sizes = args.sizes;
    opts.seeds = args.seeds;
    opts.gamma = args.gamma;
    opts.density = args.density;
    opts.threads = args.threads;
    opts.config = args.config.resolve();
    opts.config.epsilon = args.epsilon;

    const BenchReport report = run_bench(opts);
    write_bench_csv(report, args.out_path);
    std::printf("instances = %zu\n", report.rows.size());
    print_value("fitted_exponent", report.fitted_exponent);
    print_value("fitted_exponent_baseline", report.fitted_exponent_baseline);
    std::printf("rows written to %s\n", args.out_path.c_str());
    return kOk;
}

int run_verify(const VerifyArgs& args) {
    if (args.trials == 0) throw std::invalid_argument("verify: --trials must be positive");
    VerifyOptions opts;
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.max_n = args.max_n;
    opts.negative_control = args.negative_control;

    const auto results = run_verify_sweeps(opts);
    constexpr double kTol = 1e-8;
    bool ok = true;
    for (const auto& r : results) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", r.max_violation);
        std::printf("%s: trials=%zu max_violation=%s%s\n", r.lemma.c_str(), r.trials, buf,
                    r.max_violation > kTol ? "  [VIOLATION]" : "");
        if (r.max_violation > kTol) ok = false;
    }
    return ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adaptive-step interior point solvers for M-matrix scaling and "
                 "non-negative quadratic optimization"};
    app.require_subcommand(1);

    ScaleArgs scale_args;
    auto* scale = app.add_subcommand("scale", "compute x > 0 with ||XAX1 - 1||_2 <= eps");
    scale->add_option("matrix", scale_args.matrix_path, "Matrix Market file (symmetric real)")
        ->required();
    scale->add_option("--eps", scale_args.epsilon, "residual target")->capture_default_str();
    scale->add_option("--out", scale_args.out_path, "output vector file (default <matrix>.x)");
    scale->add_option("--trace", scale_args.trace_path, "write per-iteration trace CSV");
    scale_args.config.attach(scale);

    QpArgs qp_args;
    auto* qp = app.add_subcommand("qp", "minimize x'Ax/2 - b'x over x >= 0");
    qp->add_option("matrix", qp_args.matrix_path, "Matrix Market file (symmetric real)")
        ->required();
    qp->add_option("b", qp_args.b_path, "plain-text vector file")->required();
    qp->add_option("--eps", qp_args.epsilon, "suboptimality target")->capture_default_str();
    qp->add_option("--out", qp_args.out_path, "output vector file (default <matrix>.x)");
    qp->add_option("--trace", qp_args.trace_path, "write per-iteration trace CSV");
    qp_args.config.attach(qp);

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "iteration-count scaling harness");
    bench->add_option("--family", bench_args.families,
                      "instance family (repeatable): grid-laplacian|er-graph-laplacian|"
                      "random-dd|diagonal")
        ->required();
    bench->add_option("--n", bench_args.sizes, "instance sizes (repeatable, >=4 distinct)")
        ->required();
    bench->add_option("--seed", bench_args.seeds, "instance seeds (repeatable)")
        ->capture_default_str();
    bench->add_option("--eps", bench_args.epsilon, "residual target")->capture_default_str();
    bench->add_option("--gamma", bench_args.gamma, "identity shift for Laplacian families")
        ->capture_default_str();
    bench->add_option("--density", bench_args.density, "ER edge probability (0 = auto)");
    bench->add_option("--threads", bench_args.threads, "instance-level parallelism")
        ->capture_default_str();
    bench->add_option("--out", bench_args.out_path, "bench CSV path")->capture_default_str();
    bench_args.config.attach(bench);

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "randomized lemma sweeps, dense oracle");
    verify->add_option("--trials", verify_args.trials, "trials per sweep")
        ->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "sweep seed")->capture_default_str();
    verify->add_option("--max-n", verify_args.max_n, "max instance size")
        ->capture_default_str();
    verify->add_flag("--negative-control", verify_args.negative_control,
                     "test fixture: inject a sign flip and expect a violation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (scale->parsed()) return run_scale(scale_args);
        if (qp->parsed()) return run_qp(qp_args);
        if (bench->parsed()) return run_bench_cmd(bench_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const MatrixMarketError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInputError;
    } catch (const PositiveOffDiagonalError& e) {
        std::fprintf(stderr, "certification failed: %s\n", e.what());
        return kInputError;
    } catch (const NotPositiveDefiniteError& e) {
        std::fprintf(stderr, "certification failed: %s\n", e.what());
        return kInputError;
    } catch (const CertificationFailedError& e) {
        std::fprintf(stderr, "certification failed: %s\n", e.what());
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInputError;
    } catch (const LemmaViolationError& e) {
        std::fprintf(stderr, "lemma violation: %s\n", e.what());
        return kViolation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kViolation;
    }
    return kInputError;
}
