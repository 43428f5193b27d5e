#pragma once

// Internal machinery shared by the scaling solver, the quadratic solver and
// the short-step baseline: the predictor-corrector loop over increasing mu,
// plus the runtime lemma bookkeeping. Not installed.

#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mmipm/central_path.hpp"
#include "mmipm/config.hpp"
#include "mmipm/diagnostics.hpp"
#include "mmipm/errors.hpp"
#include "mmipm/sparse.hpp"

namespace mmipm::detail {

// Per-lemma assert thresholds. Energy-lemma checks scale with n and are
// handled separately.
inline constexpr double kTolContraction = 1e-8;
inline constexpr double kTolPredictorSafety = 1e-8;
inline constexpr double kTolStability = 1e-8;
inline constexpr double kTolFullCorrection = 1e-8;
inline constexpr double kTolPhiBounds = 1e-6;
inline constexpr double kTolCoordinateMonotone = 1e-8;
inline constexpr double kTolCongestionRange = 1e-10;
inline constexpr double kTolCenteredGap = 1e-6;
inline constexpr double kTolObjectiveMonotone = 1e-10;
inline constexpr double kTolInitSwitch = 1e-8;
inline constexpr double kTolXNormBound = 1e-6;

class DiagRuntime {
public:
    explicit DiagRuntime(DiagnosticsLevel level = DiagnosticsLevel::Off) : level_(level) {}

    DiagnosticsLevel level() const { return level_; }
    bool on() const { return level_ != DiagnosticsLevel::Off; }

    // Clamps at zero, tracks the per-lemma worst magnitude, appends positive
    // magnitudes to the step's violation list, and throws in assert mode when
    // the threshold is breached.
    void record(std::vector<LemmaCheck>* sink, const std::string& lemma, double magnitude,
                double threshold) {
        magnitude = std::max(0.0, magnitude);
        double& w = worst_[lemma];
        w = std::max(w, magnitude);
        if (magnitude > 0.0 && sink) sink->push_back({lemma, magnitude});
        if (level_ == DiagnosticsLevel::Assert && magnitude > threshold)
            throw LemmaViolationError(lemma, magnitude);
    }

    // Every rhs = 1 solve passes through here so the entrywise positivity and
    // the l2 bound ||rho_hat||_2 <= sqrt(n) (from H >= I) are watched
    // globally. Entries above 1 are possible when XAX has negative row sums,
    // so only the extreme value is tracked for them.
    void observe_congestion(const CongestionVector& c, std::vector<LemmaCheck>* sink = nullptr) {
        min_rho_hat_ = std::min(min_rho_hat_, c.min);
        max_rho_hat_ = std::max(max_rho_hat_, c.max);
        if (!on()) return;
        record(sink, "congestion_lower", -c.min, kTolCongestionRange);
        record(sink, "congestion_l2",
               c.l2 - std::sqrt(static_cast<double>(c.rho_hat.size())), kTolCongestionRange);
    }

    double min_rho_hat() const { return min_rho_hat_; }
    double max_rho_hat() const { return max_rho_hat_; }
    const std::map<std::string, double>& worst() const { return worst_; }

private:
    DiagnosticsLevel level_;
    double min_rho_hat_ = std::numeric_limits<double>::infinity();
    double max_rho_hat_ = -std::numeric_limits<double>::infinity();
    std::map<std::string, double> worst_;
};

enum class MsStepRule { Adaptive, FixedShortStep };

struct PathRun {
    IpmState state;
    std::vector<StepTrace> trace;
    DiagRuntime diag;
    std::size_t phase_index = 0;
    std::size_t iter = 0;
    // Potential at the current centered point w.r.t. the current anchor;
    // invalidated whenever the anchor moves.
    double cached_phi = std::numeric_limits<double>::quiet_NaN();
    bool phi_valid = false;
};

double potential_sum(const SparseSymMatrix& a, PathRun& run, double mu0,
                     const SolverConfig& config, std::vector<LemmaCheck>* sink);

CenterOutcome center_recorded(const SparseSymMatrix& a, PathRun& run, double mu,
                              const SolverConfig& config, std::vector<LemmaCheck>* sink,
                              std::size_t extra_polish = 0);

void check_finite(const IpmState& state);

// Predictor-corrector loop of the scaling method: walks mu upward from
// state.mu to exactly mu_F (the last step is clipped to land there), centering
// after every predictor. Appends one StepTrace per iteration.
void run_ms_path(const SparseSymMatrix& a, PathRun& run, double mu_F, const SolverConfig& config,
                 MsStepRule rule);

}  // namespace mmipm::detail
