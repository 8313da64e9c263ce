#include "nlslab/profile.hpp"

#include <cmath>
#include <stdexcept>

namespace nlslab {

namespace {

double dist(const Point& a, const Point& b, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += (a[d] - b[d]) * (a[d] - b[d]);
    return std::sqrt(s);
}

// e(t) = exp(-1/t) for t > 0, else 0.
double e_fn(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double Profile::support_bound_from_origin() const {
    return dist(center, Point{}, dim) + support_radius();
}

double Profile::eval(const Point& x) const {
    double rho = dist(x, center, dim);
    if (kind == ProfileKind::Bump) {
        if (rho >= radius) return 0.0;  // clamp before the exponential
        double q = rho / radius;
        return amplitude * std::exp(1.0 - 1.0 / (1.0 - q * q));
    }
    if (rho >= outer_radius) return 0.0;
    if (rho <= inner_radius) return amplitude;
    double t = (outer_radius - rho) / (outer_radius - inner_radius);
    double et = e_fn(t);
    return amplitude * et / (et + e_fn(1.0 - t));
}

double Profile::laplacian_fd(const Point& x) const {
    double eta = 1e-4 * support_radius();
    double lap = 0.0;
    for (int d = 0; d < dim; ++d) {
        Point p = x;
        auto at = [&](double s) {
            p[d] = x[d] + s;
            return eval(p);
        };
        lap += (-at(-2 * eta) + 16 * at(-eta) - 30 * at(0) + 16 * at(eta) - at(2 * eta)) /
               (12 * eta * eta);
    }
    return lap;
}

Point Profile::gradient_fd(const Point& x) const {
    double eta = 1e-4 * support_radius();
    Point g{};
    for (int d = 0; d < dim; ++d) {
        Point p = x;
        auto at = [&](double s) {
            p[d] = x[d] + s;
            return eval(p);
        };
        g[d] = (at(-2 * eta) - 8 * at(-eta) + 8 * at(eta) - at(2 * eta)) / (12 * eta);
    }
    return g;
}

Profile make_bump(int dim, const Point& center, double radius, double amplitude) {
    if (radius <= 0) throw std::invalid_argument("bump: radius must be > 0");
    Profile p;
    p.kind = ProfileKind::Bump;
    p.dim = dim;
    p.center = center;
    p.amplitude = amplitude;
    p.radius = radius;
    return p;
}

Profile make_plateau(int dim, const Point& center, double inner_radius, double outer_radius,
                     double amplitude) {
    if (inner_radius <= 0 || outer_radius <= inner_radius)
        throw std::invalid_argument("plateau: need 0 < inner_radius < outer_radius");
    Profile p;
    p.kind = ProfileKind::Plateau;
    p.dim = dim;
    p.center = center;
    p.amplitude = amplitude;
    p.inner_radius = inner_radius;
    p.outer_radius = outer_radius;
    return p;
}

}  // namespace nlslab
