#ifndef NLSLAB_RECOVERY_HPP
#define NLSLAB_RECOVERY_HPP

#include <string>
#include <vector>

#include "nlslab/config.hpp"
#include "nlslab/field.hpp"
#include "nlslab/xray.hpp"

namespace nlslab {

/// Normalized packet measurements along a sampling path:
///   w_m = K^{-1} e^{-i(3T + x0.xi)/h} h^{1/2} u(Th, 4*xi*T + x0_m),
/// theta_m the principal phase -Im Log w_m.
struct MeasurementLine {
    Point xi{};
    std::vector<Point> x0;
    std::vector<cdouble> w;
    std::vector<double> theta;
};

struct RecoveryResult {
    std::vector<Point> x0;
    std::vector<double> theta;
    std::vector<long> g;               // branch integers
    std::vector<double> xalpha;        // recovered
    std::vector<double> xalpha_true;   // quadrature ground truth
    double sup_error = 0.0;
};

/// Sample u_final at the measurement points by Fourier interpolation and
/// normalize. Errors: point outside the box, |w| < 0.1 (signal lost).
MeasurementLine measure_packet(const ComplexField& u_final, const ExperimentConfig& cfg,
                               const std::vector<Point>& x0_samples);

/// Anchored branch unwrapping: the first sample is the anchor (a point
/// whose forward ray misses supp alpha, so X_alpha = 0 there); g at the
/// anchor makes theta + 2*pi*g nearest 0 and is then propagated by
/// nearest-neighbor continuity. K^2 X_alpha = theta + 2*pi*g.
/// Throws "sampling too coarse" when an unwrapped increment exceeds 0.9*pi.
RecoveryResult unwrap_phase(const MeasurementLine& line, double K);

/// End-to-end Theorem-1.2 pipeline: evolve, measure along the configured
/// path, unwrap, divide by K^2, attach quadrature ground truth.
RecoveryResult recover_xalpha(const ExperimentConfig& cfg);

/// As above but fed a precomputed final field (e.g. the assembled ansatz).
RecoveryResult recover_xalpha_from_field(const ExperimentConfig& cfg,
                                         const ComplexField& u_final);

/// Synthetic mode: X_alpha straight from quadrature, no solver.
RecoveryResult synthetic_xalpha(const ExperimentConfig& cfg);

struct Reconstruction1D {
    std::vector<double> x;            // sample abscissae (descending along the path)
    std::vector<double> alpha;        // recovered
    std::vector<double> alpha_true;
    double sup_error = 0.0;
    double l2_error = 0.0;
};

/// d=1: alpha from the derivative of X_alpha along the path.
Reconstruction1D reconstruct_alpha_1d(const ExperimentConfig& cfg, const RecoveryResult& res);

struct Reconstruction2D {
    ComplexField alpha;  // real-valued
    double rel_l2_error = 0.0;  // on B(0, 1.5 * support radius)
};

/// d=2: compose per-direction X_alpha pairs into P_alpha and invert by FBP.
/// The sinogram rows are P = 2*(X(+xi) + X(-xi)) per angle.
Reconstruction2D reconstruct_alpha_2d(const ExperimentConfig& cfg, const Sinogram& sino,
                                      const FieldGrid& out_grid);

/// CSV: `x0_coords...,theta,g,xalpha_recovered,xalpha_true,abs_err`.
void write_recovery_csv(const RecoveryResult& res, int dim, const std::string& path);

}  // namespace nlslab

#endif
