#ifndef NLSLAB_ANSATZ_HPP
#define NLSLAB_ANSATZ_HPP

#include "nlslab/config.hpp"
#include "nlslab/field.hpp"

namespace nlslab {

/// Phase integral Phi(t', y) = int_0^{t'+T} alpha(y + 2*xi*sigma) dsigma
/// with y the transported envelope argument; quadrature truncated to the
/// sigma-window where the integrand can be nonzero.
double phase_integral(const ExperimentConfig& cfg, const Point& y, double t_prime);

/// Leading amplitude at lab time t and point x:
///   a0 = psi(y) exp(-i |psi(y)|^2 Phi),  y = x - 2*xi*t/h - 2*xi*T.
cdouble a0_value(const ExperimentConfig& cfg, double t, const Point& x);

ComplexField eval_a0(const ExperimentConfig& cfg, double t, const FieldGrid& grid);

/// First correction A1 at rescaled time t' = t/h on the grid, by classical
/// RK4 along each characteristic x(s) = x - 2*xi*(t'-s), n_steps steps over
/// [-T, t']. The Laplacian forcing comes from the closed form of a0 via
/// chain rule over psi, |psi|^2 and the phase integral, with profile
/// derivatives by finite differences. When `check_halved_step` is set the
/// integration is repeated at half the step and a sup disagreement beyond
/// 1e-6 throws.
ComplexField solve_a1(const ExperimentConfig& cfg, const FieldGrid& grid, double t,
                      std::size_t n_steps = 2000, bool check_halved_step = false);

/// A1 along a single characteristic labeled by its position at time t'.
cdouble a1_value(const ExperimentConfig& cfg, double t_prime, const Point& x_at_t_prime,
                 std::size_t n_steps = 2000);

/// v = h^{-1/2} e^{i(x.xi/h - t|xi|^2/h^2)} a0.
ComplexField assemble_v(const ExperimentConfig& cfg, double t, const FieldGrid& grid);

/// u_N = h^{-1/2} e^{i(x.xi/h - t|xi|^2/h^2)} (a0 + h*a1) for N=1 (N=0 gives v).
ComplexField assemble_uN(const ExperimentConfig& cfg, double t, const FieldGrid& grid, int N,
                         std::size_t a1_steps = 2000);

}  // namespace nlslab

#endif
