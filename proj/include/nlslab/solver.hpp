#ifndef NLSLAB_SOLVER_HPP
#define NLSLAB_SOLVER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "nlslab/config.hpp"
#include "nlslab/field.hpp"

namespace nlslab {

/// h^{-1/2} e^{i(x.xi/h + T|xi|^2/h)} psi(x) sampled on grid.
/// Errors out if the carrier is under-resolved (max dx > pi*h/8) or the
/// psi support does not fit the box with margin 2R.
ComplexField initial_data(const ExperimentConfig& cfg, const FieldGrid& grid);

/// int |u|^2 (scaled sum on the uniform grid).
double mass(const ComplexField& u);

/// E(u) = 1/2 int |grad u|^2 + 1/4 int alpha |u|^4, gradient spectral.
double energy(const ComplexField& u, const Profile& alpha);

struct DiagnosticsRow {
    std::size_t step;
    double t, mass, energy, max_abs, boundary_leak;
};

struct EvolveResult {
    ComplexField u_final;
    std::vector<DiagnosticsRow> diagnostics;
    double mass_drift = 0.0;    // relative
    double energy_drift = 0.0;  // relative
    /// Fields captured at requested times, keyed by the step index.
    std::map<std::size_t, ComplexField> snapshots;
    std::vector<double> snapshot_times;
};

/// Strang-split spectral stepper for i u_t + Lap u = alpha |u|^2 u.
/// Both sub-flows are exact: the nonlinear one because it conserves |u|
/// pointwise, the linear one spectrally.
class Evolver {
public:
    Evolver(FieldGrid grid, std::vector<double> alpha_on_grid);
    Evolver(const FieldGrid& grid, const Profile& alpha);

    /// One Strang step: half nonlinear, full linear, half nonlinear.
    /// Throws on NaN/Inf in the state.
    void strang_step(ComplexField& u, double dt) const;

    /// March u from t0 to t1 in n_steps equal steps.
    void run(ComplexField& u, double t0, double t1, std::size_t n_steps) const;

    const std::vector<double>& alpha_samples() const { return alpha_; }

private:
    FieldGrid grid_;
    std::vector<double> alpha_;
};

/// Full run from -Th to Th per the config policies, with conservation
/// diagnostics recorded every `diag_stride` steps (and at the ends).
/// `capture_times` requests snapshots at the nearest step times.
EvolveResult evolve(const ExperimentConfig& cfg, const std::vector<double>& capture_times = {},
                    std::size_t diag_stride = 100);

/// CSV: `step,t,mass,energy,max_abs,boundary_leak`.
void write_diagnostics_csv(const std::vector<DiagnosticsRow>& rows, const std::string& path);

}  // namespace nlslab

#endif
