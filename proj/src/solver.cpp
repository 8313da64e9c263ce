#include "nlslab/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "nlslab/fft.hpp"

namespace nlslab {

ComplexField initial_data(const ExperimentConfig& cfg, const FieldGrid& grid) {
    double dx_max = 0.0;
    for (int d = 0; d < cfg.dim; ++d) dx_max = std::max(dx_max, grid.axis[d].dx);
    if (dx_max > std::numbers::pi * cfg.h / 8.0 + 1e-15)
        throw std::invalid_argument("initial_data: carrier under-resolved (need dx <= pi*h/8)");
    for (int d = 0; d < cfg.dim; ++d) {
        double lo = cfg.psi.center[d] - cfg.R, hi = cfg.psi.center[d] + cfg.R;
        if (lo - grid.axis[d].x_min < 2.0 * cfg.R - 1e-12 ||
            grid.axis[d].x_min + grid.extent(d) - hi < 2.0 * cfg.R - 1e-12)
            throw std::invalid_argument("initial_data: psi support needs margin >= 2R in the box");
    }
    ComplexField u(grid);
    double amp = 1.0 / std::sqrt(cfg.h);
    double xi2 = 0.0;
    for (int d = 0; d < cfg.dim; ++d) xi2 += cfg.xi[d] * cfg.xi[d];
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        Point x = grid.node(k);
        double dot = 0.0;
        for (int d = 0; d < cfg.dim; ++d) dot += x[d] * cfg.xi[d];
        double phase = dot / cfg.h + cfg.T * xi2 / cfg.h;
        u.values[k] = amp * std::polar(1.0, phase) * cfg.psi.eval(x);
    }
    return u;
}

double mass(const ComplexField& u) {
    double s = 0.0;
    for (const auto& z : u.values) s += std::norm(z);
    return s * u.grid.cell_volume();
}

double energy(const ComplexField& u, const Profile& alpha) {
    double kinetic = 0.0;
    for (int d = 0; d < u.grid.dim; ++d) {
        ComplexField g = gradient(u, d);
        for (const auto& z : g.values) kinetic += std::norm(z);
    }
    double potential = 0.0;
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        double a = alpha.eval(u.grid.node(k));
        double m = std::norm(u.values[k]);
        potential += a * m * m;
    }
    double vol = u.grid.cell_volume();
    return 0.5 * kinetic * vol + 0.25 * potential * vol;
}

Evolver::Evolver(FieldGrid grid, std::vector<double> alpha_on_grid)
    : grid_(grid), alpha_(std::move(alpha_on_grid)) {
    if (alpha_.size() != grid_.size()) throw std::invalid_argument("Evolver: alpha size mismatch");
}

Evolver::Evolver(const FieldGrid& grid, const Profile& alpha) : grid_(grid) {
    alpha_.resize(grid.size());
    for (std::size_t k = 0; k < alpha_.size(); ++k) alpha_[k] = alpha.eval(grid.node(k));
}

void Evolver::strang_step(ComplexField& u, double dt) const {
    if (u.grid != grid_) throw std::invalid_argument("strang_step: grid mismatch");
    // Half nonlinear flow, exact: |u| is pointwise invariant under it.
    auto nonlinear_half = [&] {
        for (std::size_t k = 0; k < u.values.size(); ++k) {
            double phase = -0.5 * dt * alpha_[k] * std::norm(u.values[k]);
            u.values[k] *= std::polar(1.0, phase);
        }
    };
    nonlinear_half();
    linear_propagate(u, dt);
    nonlinear_half();
    for (const auto& z : u.values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::runtime_error("strang_step: non-finite state (NaN/Inf) detected");
}

void Evolver::run(ComplexField& u, double t0, double t1, std::size_t n_steps) const {
    double dt = (t1 - t0) / double(n_steps);
    for (std::size_t s = 0; s < n_steps; ++s) strang_step(u, dt);
}

namespace {

double boundary_leak(const ComplexField& u) {
    double peak = sup_norm(u);
    if (peak == 0.0) return 0.0;
    double band_max = 0.0;
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        auto idx = u.grid.unravel(k);
        bool near_edge = false;
        for (int d = 0; d < u.grid.dim; ++d) {
            std::size_t n = u.grid.axis[d].n;
            std::size_t b = std::max<std::size_t>(2, n / 64);
            if (idx[d] < b || idx[d] >= n - b) near_edge = true;
        }
        if (near_edge) band_max = std::max(band_max, std::abs(u.values[k]));
    }
    return band_max / peak;
}

}  // namespace

EvolveResult evolve(const ExperimentConfig& cfg, const std::vector<double>& capture_times,
                    std::size_t diag_stride) {
    validate_config(cfg);
    FieldGrid grid = build_grid(cfg);
    StepPolicy steps = build_steps(cfg);
    Evolver ev(grid, cfg.alpha);
    ComplexField u = initial_data(cfg, grid);

    double t0 = -cfg.Th();
    double mass0 = mass(u);
    double energy0 = energy(u, cfg.alpha);

    // Map each requested capture time to the nearest step index.
    std::map<std::size_t, double> capture_at;
    for (double tc : capture_times) {
        auto s = std::size_t(std::clamp(std::llround((tc - t0) / steps.dt), 0LL,
                                        (long long)steps.n_steps));
        capture_at[s] = t0 + double(s) * steps.dt;
    }

    EvolveResult res;
    auto record = [&](std::size_t s) {
        double t = t0 + double(s) * steps.dt;
        res.diagnostics.push_back(
            {s, t, mass(u), energy(u, cfg.alpha), sup_norm(u), boundary_leak(u)});
    };
    auto maybe_capture = [&](std::size_t s) {
        auto it = capture_at.find(s);
        if (it != capture_at.end()) {
            res.snapshots[s] = u;
            res.snapshot_times.push_back(it->second);
        }
    };

    record(0);
    maybe_capture(0);
    for (std::size_t s = 1; s <= steps.n_steps; ++s) {
        ev.strang_step(u, steps.dt);
        if (s % diag_stride == 0 || s == steps.n_steps) record(s);
        maybe_capture(s);
        double drift = std::abs(mass(u) - mass0) / mass0;
        if (drift > cfg.mass_drift_abort)
            throw std::runtime_error("evolve: mass drift beyond tolerance, aborting");
    }

    res.u_final = std::move(u);
    res.mass_drift = std::abs(res.diagnostics.back().mass - mass0) / std::abs(mass0);
    res.energy_drift =
        energy0 != 0.0 ? std::abs(res.diagnostics.back().energy - energy0) / std::abs(energy0)
                       : std::abs(res.diagnostics.back().energy);
    return res;
}

void write_diagnostics_csv(const std::vector<DiagnosticsRow>& rows, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "step,t,mass,energy,max_abs,boundary_leak\n";
    char line[256];
    for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step, r.t,
                      r.mass, r.energy, r.max_abs, r.boundary_leak);
        os << line;
    }
}

}  // namespace nlslab
