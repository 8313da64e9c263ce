#ifndef NLSLAB_PROFILE_HPP
#define NLSLAB_PROFILE_HPP

#include <string>

#include "nlslab/grid.hpp"

namespace nlslab {

enum class ProfileKind { Bump, Plateau };

/// Compactly supported smooth radial function: either a bump
///   A * exp(1 - 1/(1 - (|x-c|/r)^2))  on B(c, r),
/// or a plateau that is exactly A on B(c, rho1), exactly 0 outside
/// B(c, rho2), and glued by the smoothstep
///   S(t) = e(t)/(e(t)+e(1-t)),  e(t) = exp(-1/t) (t>0, else 0),
/// at t = (rho2 - |x-c|)/(rho2 - rho1).
/// Evaluation clamps to exact 0 outside the support.
struct Profile {
    ProfileKind kind = ProfileKind::Bump;
    int dim = 1;
    Point center{};
    double amplitude = 0.0;
    double radius = 0.0;        // Bump
    double inner_radius = 0.0;  // Plateau
    double outer_radius = 0.0;  // Plateau

    double support_radius() const {
        return kind == ProfileKind::Bump ? radius : outer_radius;
    }
    /// Largest |y| over the support ball (support measured from the origin).
    double support_bound_from_origin() const;

    double eval(const Point& x) const;

    /// Laplacian by 4th-order centered differences, step 1e-4 * support radius.
    double laplacian_fd(const Point& x) const;
    /// Gradient by 4th-order centered differences, same step.
    Point gradient_fd(const Point& x) const;
};

Profile make_bump(int dim, const Point& center, double radius, double amplitude);
Profile make_plateau(int dim, const Point& center, double inner_radius, double outer_radius,
                     double amplitude);

}  // namespace nlslab

#endif
