#ifndef NLSLAB_SWEEP_HPP
#define NLSLAB_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "nlslab/config.hpp"
#include "nlslab/recovery.hpp"

namespace nlslab {

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;   // log-log intercept; constant C = exp(intercept)
    double rms_residual = 0.0;
    bool degenerate = false;  // errors too small/noisy for a meaningful rate
};

/// Least-squares fit of log(err) vs log(h); needs >= 3 points.
SlopeFit fit_slope(const std::vector<double>& h, const std::vector<double>& err);

struct SweepRow {
    double h = 0.0;
    double err_v = 0.0;        // max over check times of sup|u - v|
    double err_u1 = 0.0;       // same with the first correction included
    double err_xalpha = 0.0;   // recovery sup error (0 when not run)
    double slope_v_running = 0.0;
    double mass_drift = 0.0;
    double energy_drift = 0.0;
    double wall_s = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    SlopeFit slope_v, slope_u1, slope_xalpha;
    bool rate_established = true;  // fit residual below 0.3
    std::vector<RecoveryResult> recoveries;
};

/// Theorem-1.1 sweep: for each h evolve, assemble v and u1 at the check
/// times {-Th, 0, Th/2, Th}, record sup errors and conservation drifts,
/// fit log-log slopes. h_list must be strictly decreasing with >= 3 entries.
SweepReport run_convergence_sweep(const ExperimentConfig& cfg, const std::vector<double>& h_list,
                                  std::size_t a1_steps = 2000);

/// Theorem-1.2 sweep: end-to-end X_alpha recovery per h with quadrature
/// ground truth; expected fitted slope >= 0.8. Also reusable with a single
/// h. When `also_errors` is set the u/v comparison columns are filled too.
SweepReport run_recovery_experiment(const ExperimentConfig& cfg, const std::vector<double>& h_list,
                                    bool also_errors = false, std::size_t a1_steps = 2000);

/// Emit sweep.csv, summary.txt and per-curve gnuplot data files into dir.
void write_sweep_artifacts(const SweepReport& rep, const std::string& dir);

}  // namespace nlslab

#endif
