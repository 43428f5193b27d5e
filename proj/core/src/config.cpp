#include "mmipm/config.hpp"

#include <stdexcept>

namespace mmipm {

void SolverConfig::validate() const {
    if (!(epsilon > 0.0)) throw std::invalid_argument("config: epsilon must be positive");
    if (!(center_tol > 0.0)) throw std::invalid_argument("config: center_tol must be positive");
    if (!(0.0 < ls_window_lo && ls_window_lo < ls_window_hi))
        throw std::invalid_argument("config: require 0 < ls_window_lo < ls_window_hi");
    if (!(step_coeff >= 16.0)) throw std::invalid_argument("config: step_coeff must be >= 16");
    if (max_correctors == 0) throw std::invalid_argument("config: max_correctors must be >= 1");
    if (!(threshold_coeff > 0.0))
        throw std::invalid_argument("config: threshold_coeff must be positive");
    solve_params().validate();
}

}  // namespace mmipm
