// Exercises the command-line surface: exit codes, file outputs and the
// config snapshot. Usage: cli_tests <path-to-mmipm-binary> <scratch-dir>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

int g_failures = 0;

#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, msg); \
            ++g_failures;                                                       \
        }                                                                       \
    } while (0)

std::string g_cli;
std::string g_dir;

struct ProcResult {
    int exit_code = -1;
    std::string out;
};

ProcResult run_proc(const std::string& args) {
    ProcResult r;
    FILE* p = popen((g_cli + " " + args + " 2>&1").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), p)) r.out.append(buf, got);
    const int rc = pclose(p);
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

double parse_value(const std::string& out, const std::string& key) {
    const std::string needle = key + " = ";
    const auto pos = out.find(needle);
    if (pos == std::string::npos) return std::nan("");
    return std::strtod(out.c_str() + pos + needle.size(), nullptr);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: cli_tests <mmipm-binary> <scratch-dir>\n");
        return 2;
    }
    g_cli = argv[1];
    g_dir = argv[2];
    std::filesystem::create_directories(g_dir);

    const std::string id3 = g_dir + "/id3.mtx";
    write_file(id3,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "3 3 3\n1 1 1\n2 2 1\n3 3 1\n");

    {  // scale on the identity: x = 1, residual 0
        const ProcResult r = run_proc("scale " + id3 + " --eps 1e-6 --out " + g_dir + "/id3.x");
        REQUIRE(r.exit_code == 0, "scale identity exit code");
        REQUIRE(parse_value(r.out, "residual_l2") == 0.0, "identity residual");
        std::ifstream xs(g_dir + "/id3.x");
        double v = 0.0;
        int count = 0;
        while (xs >> v) {
            REQUIRE(v == 1.0, "identity scaling vector entry");
            ++count;
        }
        REQUIRE(count == 3, "identity scaling vector length");
    }

    {  // scale on a 2x2-grid Laplacian instance; residual verified below eps
        write_file(g_dir + "/grid4.mtx",
                   "%%MatrixMarket matrix coordinate real symmetric\n"
                   "4 4 8\n"
                   "1 1 2.01\n2 2 2.01\n3 3 2.01\n4 4 2.01\n"
                   "2 1 -1\n3 1 -1\n4 2 -1\n4 3 -1\n");
        const ProcResult r = run_proc("scale " + g_dir + "/grid4.mtx --eps 1e-6 --trace " +
                                      g_dir + "/grid4.csv");
        REQUIRE(r.exit_code == 0, "scale grid exit code");
        REQUIRE(parse_value(r.out, "residual_l2") <= 1e-6, "scale grid residual");
        std::ifstream trace(g_dir + "/grid4.csv");
        std::string header;
        REQUIRE(std::getline(trace, header) &&
                    header == "iter,phase,mu,delta,rho_l2,rho_l3,rho_l4,rho_linf,phi,"
                              "step_kind,correctors,residual,violation_max",
                "trace header");
        REQUIRE(std::filesystem::exists(g_dir + "/grid4.csv.config.json"),
                "config snapshot next to trace");
    }

    {  // malformed header -> exit 2
        write_file(g_dir + "/bad.mtx", "%%NotMatrixMarket\n1 1 1\n1 1 1\n");
        REQUIRE(run_proc("scale " + g_dir + "/bad.mtx").exit_code == 2, "malformed header exit");
    }

    {  // positive off-diagonal -> certification failure -> exit 2
        write_file(g_dir + "/pos.mtx",
                   "%%MatrixMarket matrix coordinate real symmetric\n"
                   "2 2 3\n1 1 1\n2 1 0.1\n2 2 1\n");
        REQUIRE(run_proc("scale " + g_dir + "/pos.mtx").exit_code == 2,
                "positive off-diagonal exit");
    }

    {  // qp scalar: A = [1], b = [2] -> x ~ 2
        write_file(g_dir + "/a1.mtx",
                   "%%MatrixMarket matrix coordinate real symmetric\n1 1 1\n1 1 1\n");
        write_file(g_dir + "/b2.txt", "2\n");
        const ProcResult r = run_proc("qp " + g_dir + "/a1.mtx " + g_dir + "/b2.txt" +
                                      " --eps 1e-6 --out " + g_dir + "/qp.x");
        REQUIRE(r.exit_code == 0, "qp scalar exit code");
        std::ifstream xs(g_dir + "/qp.x");
        double x = 0.0;
        xs >> x;
        REQUIRE(std::fabs(x - 2.0) <= 1e-3, "qp scalar solution near 2");
        REQUIRE(parse_value(r.out, "gap_bound") <= 1e-6, "qp gap bound");
    }

    {  // qp with all-negative b: optimum at 0, objective ~ 0
        write_file(g_dir + "/bneg.txt", "-1\n-1\n-1\n");
        const ProcResult r = run_proc("qp " + id3 + " " + g_dir + "/bneg.txt --eps 1e-6");
        REQUIRE(r.exit_code == 0, "qp negative-b exit code");
        const double obj = parse_value(r.out, "objective");
        REQUIRE(std::fabs(obj) <= 1e-6, "qp negative-b tiny objective");
    }

    {  // dimension mismatch between matrix and b -> exit 2
        write_file(g_dir + "/b1.txt", "1\n");
        REQUIRE(run_proc("qp " + id3 + " " + g_dir + "/b1.txt").exit_code == 2,
                "qp dimension mismatch exit");
    }

    {  // config file is honored; explicit flags win
        write_file(g_dir + "/cfg.json", "{\"center_tol\": 1e-8, \"diagnostics\": \"soft\"}\n");
        const ProcResult r = run_proc("scale " + id3 + " --config " + g_dir +
                                      "/cfg.json --trace " + g_dir + "/cfg_trace.csv");
        REQUIRE(r.exit_code == 0, "scale with config file");
        std::ifstream snap(g_dir + "/cfg_trace.csv.config.json");
        std::string content((std::istreambuf_iterator<char>(snap)),
                            std::istreambuf_iterator<char>());
        REQUIRE(content.find("1e-08") != std::string::npos, "config file value in snapshot");
        REQUIRE(content.find("\"soft\"") != std::string::npos, "config diagnostics in snapshot");

        const ProcResult r2 = run_proc("scale " + id3 + " --config " + g_dir +
                                       "/cfg.json --center-tol 1e-9 --trace " + g_dir +
                                       "/cfg_trace2.csv");
        REQUIRE(r2.exit_code == 0, "scale with config file and flag");
        std::ifstream snap2(g_dir + "/cfg_trace2.csv.config.json");
        std::string content2((std::istreambuf_iterator<char>(snap2)),
                             std::istreambuf_iterator<char>());
        REQUIRE(content2.find("1e-09") != std::string::npos, "flag overrides config file");
    }

    {  // bench usage errors
        REQUIRE(run_proc("bench --n 64 --n 128 --n 256 --n 512").exit_code == 2,
                "bench without family");
        REQUIRE(run_proc("bench --family grid-laplacian --n 64 --n 128").exit_code == 2,
                "bench with too few sizes");
        REQUIRE(run_proc("bench --family nope --n 8 --n 16 --n 32 --n 64").exit_code == 2,
                "bench with unknown family");
    }

    {  // verify usage and negative control
        REQUIRE(run_proc("verify --trials 0").exit_code == 2, "verify --trials 0");
        REQUIRE(run_proc("verify --trials 10 --max-n 8").exit_code == 0, "verify small run");
        REQUIRE(run_proc("verify --trials 10 --max-n 8 --negative-control").exit_code == 1,
                "verify negative control");
    }

    {  // unknown subcommand / no subcommand -> usage error
        REQUIRE(run_proc("frobnicate").exit_code == 2, "unknown subcommand");
        REQUIRE(run_proc("").exit_code == 2, "missing subcommand");
    }

    if (g_failures == 0) {
        std::printf("cli_tests: all checks passed\n");
        return 0;
    }
    std::fprintf(stderr, "cli_tests: %d failures\n", g_failures);
    return 1;
}
