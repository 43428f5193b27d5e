#include "config_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace mmipm::cli {

namespace {

DiagnosticsLevel parse_diag(const std::string& s) {
    if (s == "off") return DiagnosticsLevel::Off;
    if (s == "soft") return DiagnosticsLevel::Soft;
    if (s == "assert") return DiagnosticsLevel::Assert;
    throw CLI::ValidationError("--diagnostics", "must be one of off|soft|assert");
}

const char* diag_name(DiagnosticsLevel d) {
    switch (d) {
        case DiagnosticsLevel::Off: return "off";
        case DiagnosticsLevel::Soft: return "soft";
        case DiagnosticsLevel::Assert: return "assert";
    }
    return "off";
}

}  // namespace

void ConfigArgs::attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file; explicit flags win");
    opt_center_tol =
        cmd->add_option("--center-tol", values.center_tol, "centering residual target");
    opt_cg_tol = cmd->add_option("--cg-tol", values.cg_rel_tol, "CG relative residual target");
    opt_cg_iters =
        cmd->add_option("--cg-max-iters", values.cg_max_iters, "CG iteration cap (0 = 20n+200)");
    opt_correctors =
        cmd->add_option("--max-correctors", values.max_correctors, "corrector cap per step");
    opt_step_coeff =
        cmd->add_option("--step-coeff", values.step_coeff, "predictor denominator (default 32)");
    opt_ls_lo = cmd->add_option("--ls-lo", values.ls_window_lo, "line-search window lower edge");
    opt_ls_hi = cmd->add_option("--ls-hi", values.ls_window_hi, "line-search window upper edge");
    opt_threshold = cmd->add_option("--threshold-coeff", values.threshold_coeff,
                                    "long/short classification coefficient");
    opt_diag = cmd->add_option("--diagnostics", diag_name, "off|soft|assert");
}

SolverConfig ConfigArgs::resolve() const {
    SolverConfig cfg = values;
    cfg.diagnostics = parse_diag(diag_name);

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + config_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config parse error: " + std::string(e.what()));
        }
        auto keep = [](CLI::Option* o) { return o && o->count() > 0; };
        if (j.contains("center_tol") && !keep(opt_center_tol))
            cfg.center_tol = j["center_tol"].get<double>();
        if (j.contains("cg_rel_tol") && !keep(opt_cg_tol))
            cfg.cg_rel_tol = j["cg_rel_tol"].get<double>();
        if (j.contains("cg_max_iters") && !keep(opt_cg_iters))
            cfg.cg_max_iters = j["cg_max_iters"].get<std::size_t>();
        if (j.contains("max_correctors") && !keep(opt_correctors))
            cfg.max_correctors = j["max_correctors"].get<std::size_t>();
        if (j.contains("step_coeff") && !keep(opt_step_coeff))
            cfg.step_coeff = j["step_coeff"].get<double>();
        if (j.contains("ls_window") && !keep(opt_ls_lo))
            cfg.ls_window_lo = j["ls_window"][0].get<double>();
        if (j.contains("ls_window") && !keep(opt_ls_hi))
            cfg.ls_window_hi = j["ls_window"][1].get<double>();
        if (j.contains("threshold_coeff") && !keep(opt_threshold))
            cfg.threshold_coeff = j["threshold_coeff"].get<double>();
        if (j.contains("diagnostics") && !keep(opt_diag))
            cfg.diagnostics = parse_diag(j["diagnostics"].get<std::string>());
    }
    cfg.validate();
    return cfg;
}

std::string config_to_json(const SolverConfig& cfg) {
    nlohmann::json j;
    j["epsilon"] = cfg.epsilon;
    j["center_tol"] = cfg.center_tol;
    j["cg_rel_tol"] = cfg.cg_rel_tol;
    j["cg_max_iters"] = cfg.cg_max_iters;
    j["max_correctors"] = cfg.max_correctors;
    j["step_coeff"] = cfg.step_coeff;
    j["ls_window"] = {cfg.ls_window_lo, cfg.ls_window_hi};
    j["threshold_coeff"] = cfg.threshold_coeff;
    j["diagnostics"] = diag_name(cfg.diagnostics);
    return j.dump(2);
}

void write_config_snapshot(const SolverConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config snapshot '" + path + "'");
    out << config_to_json(cfg) << "\n";
}

}  // namespace mmipm::cli
