#pragma once

#include <string>

#include <CLI11.hpp>

#include "mmipm/config.hpp"

namespace mmipm::cli {

// Registers the solver tunables as flags on a subcommand. Flag values win
// over a --config JSON file; the file only fills in what the command line
// left untouched.
struct ConfigArgs {
    std::string config_path;
    SolverConfig values;
    CLI::Option* opt_center_tol = nullptr;
    CLI::Option* opt_cg_tol = nullptr;
    CLI::Option* opt_cg_iters = nullptr;
    CLI::Option* opt_correctors = nullptr;
    CLI::Option* opt_step_coeff = nullptr;
    CLI::Option* opt_ls_lo = nullptr;
    CLI::Option* opt_ls_hi = nullptr;
    CLI::Option* opt_threshold = nullptr;
    CLI::Option* opt_diag = nullptr;
    std::string diag_name = "off";

    void attach(CLI::App* cmd);
    // Merges JSON (if any) with command-line overrides and validates.
    SolverConfig resolve() const;
};

std::string config_to_json(const SolverConfig& cfg);
void write_config_snapshot(const SolverConfig& cfg, const std::string& path);

}  // namespace mmipm::cli
