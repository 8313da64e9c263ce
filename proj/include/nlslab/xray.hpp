#ifndef NLSLAB_XRAY_HPP
#define NLSLAB_XRAY_HPP

#include <string>
#include <vector>

#include "nlslab/field.hpp"
#include "nlslab/profile.hpp"

namespace nlslab {

/// Half-line X-ray transform X_alpha(x0, xi) = 1/2 * int_0^inf alpha(x0+s*xi) ds.
/// Composite Gauss-Legendre (64 panels x 8 nodes) on s in [0, |x0| + T0]
/// where T0 bounds the support of alpha from the origin; the integrand
/// vanishes beyond.  Rejects |xi| != 1 beyond 1e-12.
double xray_transform(const Profile& alpha, const Point& x0, const Point& xi);

/// Full-line transform P_alpha = 2*(X(xi) + X(-xi)) = int_R alpha(x0+s*xi) ds.
double pray_transform(const Profile& alpha, const Point& x0, const Point& xi);

/// 1D derivative recovery: alpha(x0) = -2 * d/dx0 X_alpha(x0, 1),
/// 4th-order centered differences (one-sided at the two edge pairs).
/// Requires >= 5 uniformly spaced samples.
std::vector<double> recover_alpha_1d(const std::vector<double>& xalpha_samples, double dx);

/// 2D parallel-beam sinogram. For angle theta_j the ray direction is
/// xi_j = (cos theta_j, sin theta_j) and offsets t_k run along the
/// perpendicular n_j = (-sin theta_j, cos theta_j); values hold
/// P_alpha(t_k * n_j, xi_j), angles-major.
struct Sinogram {
    std::vector<double> angles;   // uniformly spaced over [0, pi)
    std::vector<double> offsets;  // uniform signed offsets
    std::vector<double> values;   // size angles*offsets, angle-major

    double& at(std::size_t j, std::size_t k) { return values[j * offsets.size() + k]; }
    double at(std::size_t j, std::size_t k) const { return values[j * offsets.size() + k]; }
};

/// Forward projection of a profile by quadrature (oracle-grade input to FBP).
Sinogram forward_project(const Profile& alpha, std::size_t n_angles, std::size_t n_offsets,
                         double offset_max);

/// Filtered backprojection: per-angle Ram-Lak ramp filtering apodized by a
/// Hann window, then backprojection onto out_grid (d=2). Output imaginary
/// parts are identically zero. Rejects non-uniform angle/offset spacing.
ComplexField fbp_invert_2d(const Sinogram& sino, const FieldGrid& out_grid);

/// CSV: header `angle_index,theta,offset,value`.
void write_sinogram_csv(const Sinogram& sino, const std::string& path);
Sinogram read_sinogram_csv(const std::string& path);

}  // namespace nlslab

#endif
