#ifndef NLSLAB_CONFIG_HPP
#define NLSLAB_CONFIG_HPP

#include <iosfwd>
#include <string>

#include "nlslab/grid.hpp"
#include "nlslab/profile.hpp"

namespace nlslab {

/// Full experiment parameter set. The hypotheses behind it:
///   0 < h < 1, |xi| = 1, T > T0/2,
///   supp alpha in B(0, T0) with amplitude >= 0,
///   supp psi in B(0, R), psi a plateau equal to K on B(0, 2*T0).
/// validate() checks each one and throws a named error.
struct ExperimentConfig {
    int dim = 1;
    double h = 0.1;
    double T = 1.0;
    double T0 = 1.0;
    double R = 4.0;
    double K = 1.0;
    Point xi{1.0, 0.0, 0.0};

    Profile alpha;  // nonlinearity coefficient
    Profile psi;    // packet envelope (plateau)

    // Grid / box policy.
    Point box_min{-12.0, 0.0, 0.0};
    Point box_max{20.0, 0.0, 0.0};
    double dx_factor = 8.0;     // dx <= pi*h/dx_factor (>= dx_factor samples... carrier policy)
    double dt_divisor = 2000.0; // dt = h/dt_divisor
    double mass_drift_abort = 1e-8;

    // Measurement path: x0 = s*xi for s from measure_start down to
    // measure_stop with the given spacing; the start is the anchor.
    double measure_start = 1.5;
    double measure_stop = -2.0;
    double measure_spacing = 0.005;

    std::string out_dir = "out";

    double Th() const { return T * h; }
};

/// Canonical desk configuration: d=1, T0=1, T=1, R=4, xi=1, K=1,
/// alpha = Bump(0, r=1, A=0.5), psi = Plateau(0, 2.5, 4, 1), box [-12, 20].
ExperimentConfig canonical_config_1d();

/// Flat `key = value` config text, `#` comments, section dots
/// (e.g. `alpha.kind = bump`).
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
std::string emit_config(const ExperimentConfig& cfg);

/// Throws std::invalid_argument naming the violated hypothesis.
void validate_config(const ExperimentConfig& cfg);

/// Grid per the solver policy: box extents, power-of-two counts with
/// dx <= pi*h/dx_factor on every axis.
FieldGrid build_grid(const ExperimentConfig& cfg);

/// dt = h/dt_divisor rounded so an integer number of steps covers [-Th, Th].
struct StepPolicy {
    double dt = 0.0;
    std::size_t n_steps = 0;
};
StepPolicy build_steps(const ExperimentConfig& cfg);

/// Measurement sample offsets s (x0 = s*xi), anchor first.
std::vector<double> measurement_offsets(const ExperimentConfig& cfg);

}  // namespace nlslab

#endif
