#include "nlslab/ansatz.hpp"

#include <cmath>
#include <stdexcept>

#include "gauss.hpp"

namespace nlslab {

namespace {

constexpr std::size_t kPhasePanels = 64;

double norm(const Point& x, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += x[d] * x[d];
    return std::sqrt(s);
}

double xi_dot(const ExperimentConfig& cfg, const Point& x) {
    double s = 0.0;
    for (int d = 0; d < cfg.dim; ++d) s += cfg.xi[d] * x[d];
    return s;
}

// Envelope argument y = x - 2*xi*t' - 2*xi*T.
Point transported_arg(const ExperimentConfig& cfg, double t_prime, const Point& x) {
    Point y{};
    for (int d = 0; d < cfg.dim; ++d) y[d] = x[d] - 2.0 * cfg.xi[d] * (t_prime + cfg.T);
    return y;
}

}  // namespace

double phase_integral(const ExperimentConfig& cfg, const Point& y, double t_prime) {
    double upper = t_prime + cfg.T;
    if (upper <= 0.0) return 0.0;
    // |y + 2*xi*sigma| >= 2*sigma - |y|, so the integrand dies past
    // sigma = (|y| + T0_bound)/2.
    double bound = cfg.alpha.support_bound_from_origin();
    upper = std::min(upper, 0.5 * (norm(y, cfg.dim) + bound));
    if (upper <= 0.0) return 0.0;
    auto f = [&](double sigma) {
        Point p{};
        for (int d = 0; d < cfg.dim; ++d) p[d] = y[d] + 2.0 * cfg.xi[d] * sigma;
        return cfg.alpha.eval(p);
    };
    return detail::gauss_composite(f, 0.0, upper, kPhasePanels);
}

cdouble a0_value(const ExperimentConfig& cfg, double t, const Point& x) {
    double t_prime = t / cfg.h;
    Point y = transported_arg(cfg, t_prime, x);
    double pv = cfg.psi.eval(y);
    if (pv == 0.0) return 0.0;
    double phi = phase_integral(cfg, y, t_prime);
    return pv * std::polar(1.0, -pv * pv * phi);
}

ComplexField eval_a0(const ExperimentConfig& cfg, double t, const FieldGrid& grid) {
    ComplexField out(grid);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = a0_value(cfg, t, grid.node(k));
    return out;
}

namespace {

// RK4 state along one characteristic: the correction amplitude plus the
// phase integral and its first two spatial derivative aggregates, which
// all advance by alpha-profile data sampled on the ray.
struct CharState {
    cdouble a1{};
    double phi = 0.0;
    Point grad_phi{};
    double lap_phi = 0.0;
};

CharState operator+(const CharState& a, const CharState& b) {
    CharState s;
    s.a1 = a.a1 + b.a1;
    s.phi = a.phi + b.phi;
    for (int d = 0; d < 3; ++d) s.grad_phi[d] = a.grad_phi[d] + b.grad_phi[d];
    s.lap_phi = a.lap_phi + b.lap_phi;
    return s;
}

CharState operator*(double c, const CharState& a) {
    CharState s;
    s.a1 = c * a.a1;
    s.phi = c * a.phi;
    for (int d = 0; d < 3; ++d) s.grad_phi[d] = c * a.grad_phi[d];
    s.lap_phi = c * a.lap_phi;
    return s;
}

class CharacteristicODE {
public:
    CharacteristicODE(const ExperimentConfig& cfg, const Point& w) : cfg_(cfg), w_(w) {
        psi_val_ = cfg.psi.eval(w);
        psi_grad_ = cfg.psi.gradient_fd(w);
        psi_lap_ = cfg.psi.laplacian_fd(w);
        p2_ = psi_val_ * psi_val_;
        double g2 = 0.0;
        for (int d = 0; d < cfg.dim; ++d) {
            grad_p2_[d] = 2.0 * psi_val_ * psi_grad_[d];
            g2 += psi_grad_[d] * psi_grad_[d];
        }
        lap_p2_ = 2.0 * g2 + 2.0 * psi_val_ * psi_lap_;
    }

    CharState rhs(double s, const CharState& st) const {
        Point c{};
        for (int d = 0; d < cfg_.dim; ++d) c[d] = w_[d] + 2.0 * cfg_.xi[d] * (s + cfg_.T);
        double a = cfg_.alpha.eval(c);
        Point ga = cfg_.alpha.gradient_fd(c);
        double la = cfg_.alpha.laplacian_fd(c);

        cdouble a0 = psi_val_ * std::polar(1.0, -p2_ * st.phi);
        // Laplacian of a0 from the closed form: a0 = psi * exp(-i*chi),
        // chi = psi^2 * Phi.
        double dot_gchi = 0.0, gchi2 = 0.0, dot_psig = 0.0;
        for (int d = 0; d < cfg_.dim; ++d) {
            double gx = grad_p2_[d] * st.phi + p2_ * st.grad_phi[d];
            gchi2 += gx * gx;
            dot_gchi += grad_p2_[d] * st.grad_phi[d];
            dot_psig += psi_grad_[d] * gx;
        }
        double lap_chi = lap_p2_ * st.phi + 2.0 * dot_gchi + p2_ * st.lap_phi;
        cdouble lap_a0 = std::polar(1.0, -p2_ * st.phi) *
                         (cdouble(psi_lap_ - psi_val_ * gchi2, 0.0) +
                          cdouble(0.0, -(2.0 * dot_psig + psi_val_ * lap_chi)));

        CharState d;
        d.a1 = cdouble(0.0, -4.0) * a * a0 * std::real(a0 * std::conj(st.a1)) +
               cdouble(0.0, 1.0) * lap_a0;
        d.phi = a;
        for (int dd = 0; dd < cfg_.dim; ++dd) d.grad_phi[dd] = ga[dd];
        d.lap_phi = la;
        return d;
    }

    double psi_val() const { return psi_val_; }

private:
    const ExperimentConfig& cfg_;
    Point w_;
    double psi_val_, psi_lap_, p2_, lap_p2_;
    Point psi_grad_{}, grad_p2_{};
};

cdouble integrate_a1(const ExperimentConfig& cfg, const Point& w, double t_prime,
                     std::size_t n_steps) {
    // Skip characteristics whose envelope data (and its stencil) vanish:
    // both forcing terms carry psi factors evaluated at w.
    double eta = 1e-4 * cfg.psi.support_radius();
    Point rel{};
    for (int d = 0; d < cfg.dim; ++d) rel[d] = w[d] - cfg.psi.center[d];
    double r = 0.0;
    for (int d = 0; d < cfg.dim; ++d) r += rel[d] * rel[d];
    if (std::sqrt(r) >= cfg.psi.support_radius() + 6.0 * eta) return 0.0;

    CharacteristicODE ode(cfg, w);
    CharState st;
    double span = t_prime + cfg.T;
    if (span <= 0.0) return 0.0;
    double hs = span / double(n_steps);
    double s = -cfg.T;
    for (std::size_t i = 0; i < n_steps; ++i) {
        CharState k1 = ode.rhs(s, st);
        CharState k2 = ode.rhs(s + 0.5 * hs, st + (0.5 * hs) * k1);
        CharState k3 = ode.rhs(s + 0.5 * hs, st + (0.5 * hs) * k2);
        CharState k4 = ode.rhs(s + hs, st + hs * k3);
        st = st + (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        s += hs;
    }
    return st.a1;
}

}  // namespace

cdouble a1_value(const ExperimentConfig& cfg, double t_prime, const Point& x_at_t_prime,
                 std::size_t n_steps) {
    Point w = transported_arg(cfg, t_prime, x_at_t_prime);
    return integrate_a1(cfg, w, t_prime, n_steps);
}

ComplexField solve_a1(const ExperimentConfig& cfg, const FieldGrid& grid, double t,
                      std::size_t n_steps, bool check_halved_step) {
    double min_dx = grid.axis[0].dx;
    for (int d = 1; d < grid.dim; ++d) min_dx = std::min(min_dx, grid.axis[d].dx);
    if (min_dx > 0.25 * std::min(cfg.alpha.support_radius(), cfg.psi.support_radius()))
        throw std::invalid_argument("solve_a1: grid too coarse for the profile radii");

    double t_prime = t / cfg.h;
    ComplexField out(grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        Point x = grid.node(k);
        out.values[k] = a1_value(cfg, t_prime, x, n_steps);
        if (check_halved_step && out.values[k] != cdouble{}) {
            cdouble fine = a1_value(cfg, t_prime, x, 2 * n_steps);
            worst = std::max(worst, std::abs(fine - out.values[k]));
        }
    }
    if (check_halved_step && worst > 1e-6)
        throw std::runtime_error("solve_a1: halved-step disagreement above 1e-6 (unstable step)");
    return out;
}

ComplexField assemble_v(const ExperimentConfig& cfg, double t, const FieldGrid& grid) {
    return assemble_uN(cfg, t, grid, 0);
}

ComplexField assemble_uN(const ExperimentConfig& cfg, double t, const FieldGrid& grid, int N,
                         std::size_t a1_steps) {
    if (N < 0 || N > 1) throw std::invalid_argument("assemble_uN: N must be 0 or 1");
    ComplexField amp = eval_a0(cfg, t, grid);
    if (N == 1) {
        ComplexField a1 = solve_a1(cfg, grid, t, a1_steps);
        for (std::size_t k = 0; k < amp.values.size(); ++k)
            amp.values[k] += cfg.h * a1.values[k];
    }
    double xi2 = 0.0;
    for (int d = 0; d < cfg.dim; ++d) xi2 += cfg.xi[d] * cfg.xi[d];
    double pref = 1.0 / std::sqrt(cfg.h);
    for (std::size_t k = 0; k < amp.values.size(); ++k) {
        Point x = grid.node(k);
        double phase = xi_dot(cfg, x) / cfg.h - t * xi2 / (cfg.h * cfg.h);
        amp.values[k] *= pref * std::polar(1.0, phase);
    }
    return amp;
}

}  // namespace nlslab
