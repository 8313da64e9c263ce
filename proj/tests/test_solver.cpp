#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "nlslab/fft.hpp"
#include "nlslab/solver.hpp"

using namespace nlslab;
using std::numbers::pi;

namespace {

ComplexField mode_field(const FieldGrid& g, std::size_t mode_index, cdouble amp) {
    ComplexField f(g);
    double k = wavenumber(g, 0, mode_index);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = amp * std::polar(1.0, k * g.coord(0, i));
    return f;
}

}  // namespace

TEST_CASE("initial data modulus and mass") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);

    SUBCASE("zero envelope gives the zero field") {
        cfg.psi.amplitude = 0.0;
        CHECK(sup_norm(initial_data(cfg, grid)) == 0.0);
    }

    SUBCASE("modulus is h^{-1/2}|psi| pointwise") {
        ComplexField u0 = initial_data(cfg, grid);
        double scale = 1.0 / std::sqrt(cfg.h);
        double err = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            err = std::max(err, std::abs(std::abs(u0[i]) - scale * cfg.psi.eval(grid.node(i))));
        CHECK(err < 1e-13 * scale);
    }

    SUBCASE("mass equals h^{-1} times the envelope mass") {
        ComplexField u0 = initial_data(cfg, grid);
        // independent profile quadrature: 1e6-point midpoint rule over the support
        double r = cfg.psi.support_radius();
        std::size_t n = 1000000;
        double dx = 2.0 * r / double(n), psi_mass = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double x = -r + (double(i) + 0.5) * dx;
            double v = cfg.psi.eval({x, 0.0, 0.0});
            psi_mass += v * v;
        }
        psi_mass *= dx;
        CHECK(mass(u0) == doctest::Approx(psi_mass / cfg.h).epsilon(1e-8));
    }

    SUBCASE("under-resolved carrier is rejected") {
        FieldGrid coarse = make_grid(1, {{cfg.box_min[0], cfg.box_max[0]}}, {128});
        CHECK_THROWS(initial_data(cfg, coarse));
    }
}

TEST_CASE("single Strang step is exact on plane waves") {
    FieldGrid g = make_grid(1, {{0.0, 2.0 * pi}}, {64});
    double dt = 0.01;

    SUBCASE("free evolution of one mode") {
        Evolver ev(g, std::vector<double>(g.size(), 0.0));
        ComplexField u = mode_field(g, 5, {1.0, 0.0});
        ev.strang_step(u, dt);
        double k = wavenumber(g, 0, 5);
        ComplexField want = mode_field(g, 5, std::polar(1.0, -k * k * dt));
        CHECK(sup_norm_diff(u, want) < 1e-13);
    }

    SUBCASE("constant alpha plane wave picks up the nonlinear phase") {
        // test-only bypass of compact support: alpha == c on the whole box
        double c = 0.8;
        Evolver ev(g, std::vector<double>(g.size(), c));
        cdouble A{1.3, -0.4};
        ComplexField u = mode_field(g, 3, A);
        ev.strang_step(u, dt);
        double k = wavenumber(g, 0, 3);
        double phase = -(k * k + c * std::norm(A)) * dt;
        ComplexField want = mode_field(g, 3, A * std::polar(1.0, phase));
        CHECK(sup_norm_diff(u, want) < 1e-12);
    }
}

TEST_CASE("one step conserves mass to rounding") {
    FieldGrid g = make_grid(1, {{-4.0, 4.0}}, {256});
    Profile alpha = make_bump(1, {0.0, 0.0, 0.0}, 1.0, 0.5);
    Evolver ev(g, alpha);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexField u(g);
    for (auto& v : u.values) v = {dist(rng), dist(rng)};
    // smooth it a touch so the state is physical
    linear_propagate(u, 1e-3);
    double m0 = mass(u);
    ev.strang_step(u, 0.003);
    CHECK(mass(u) == doctest::Approx(m0).epsilon(1e-12));
}

TEST_CASE("time reversal brings the state back") {
    FieldGrid g = make_grid(1, {{-4.0, 4.0}}, {256});
    Profile alpha = make_bump(1, {0.0, 0.0, 0.0}, 1.0, 0.5);
    Evolver ev(g, alpha);
    ComplexField u(g);
    for (std::size_t i = 0; i < g.size(); ++i) {
        double x = g.coord(0, i);
        u[i] = std::exp(-x * x) * std::polar(1.0, 2.0 * x);
    }
    ComplexField u0 = u;
    ev.run(u, 0.0, 0.05, 40);
    ev.run(u, 0.05, 0.0, 40);
    CHECK(sup_norm_diff(u, u0) < 1e-10);
}

TEST_CASE("zero nonlinearity reduces evolve to the spectral free flow") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    cfg.dt_divisor = 100;
    cfg.alpha.amplitude = 0.0;
    FieldGrid grid = build_grid(cfg);
    ComplexField u0 = initial_data(cfg, grid);
    EvolveResult res = evolve(cfg);
    ComplexField want = u0;
    linear_propagate(want, 2.0 * cfg.Th());
    CHECK(sup_norm_diff(res.u_final, want) < 1e-10);
}

TEST_CASE("splitting self-converges at second order in dt") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    std::vector<double> divisors = {25.0, 50.0, 100.0, 200.0};
    std::vector<ComplexField> finals;
    for (double dv : divisors) {
        ExperimentConfig c = cfg;
        c.dt_divisor = dv;
        finals.push_back(evolve(c).u_final);
    }
    double e1 = sup_norm_diff(finals[0], finals[1]);
    double e2 = sup_norm_diff(finals[1], finals[2]);
    double e3 = sup_norm_diff(finals[2], finals[3]);
    double order_a = std::log2(e1 / e2);
    double order_b = std::log2(e2 / e3);
    CHECK(order_a >= 1.9);
    CHECK(order_b >= 1.9);
}

TEST_CASE("canonical run agrees with a refined reference") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    EvolveResult coarse = evolve(cfg);

    ExperimentConfig ref = cfg;
    ref.dt_divisor = cfg.dt_divisor * 4.0;
    ref.dx_factor = cfg.dx_factor * 2.0;
    EvolveResult fine = evolve(ref);

    // compare on the coarse nodes via spectral interpolation of the fine run
    std::vector<Point> nodes;
    for (std::size_t i = 0; i < coarse.u_final.grid.size(); ++i)
        nodes.push_back(coarse.u_final.grid.node(i));
    std::vector<cdouble> fine_vals = fourier_interp(fine.u_final, nodes);
    double err = 0.0, amp = sup_norm(fine.u_final);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        err = std::max(err, std::abs(coarse.u_final[i] - fine_vals[i]));
    CHECK(err / amp < 1e-5);
}

TEST_CASE("mass and energy functionals") {
    FieldGrid g = make_grid(1, {{0.0, 4.0}}, {512});
    Profile alpha = make_bump(1, {2.0, 0.0, 0.0}, 1.0, 0.5);

    SUBCASE("zero field") {
        ComplexField u(g);
        CHECK(mass(u) == 0.0);
        CHECK(energy(u, alpha) == 0.0);
    }

    SUBCASE("plane wave closed form") {
        double V = g.extent(0);
        std::size_t mi = 3;
        double k = wavenumber(g, 0, mi);
        ComplexField u = mode_field(g, mi, {1.0, 0.0});
        CHECK(mass(u) == doctest::Approx(V).epsilon(1e-12));
        // 1e6-point quadrature of alpha for the potential term
        std::size_t n = 1000000;
        double dx = V / double(n), alpha_int = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            alpha_int += alpha.eval({(double(i) + 0.5) * dx, 0.0, 0.0});
        alpha_int *= dx;
        double want = 0.5 * k * k * V + 0.25 * alpha_int;
        CHECK(energy(u, alpha) == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("evolve records conservation diagnostics") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    cfg.dt_divisor = 100;
    EvolveResult res = evolve(cfg, {}, 10);
    REQUIRE(res.diagnostics.size() >= 3);
    CHECK(res.mass_drift < 1e-10);
    CHECK(res.diagnostics.front().t == doctest::Approx(-cfg.Th()));
    CHECK(res.diagnostics.back().t == doctest::Approx(cfg.Th()));
    for (const auto& row : res.diagnostics) CHECK(std::isfinite(row.energy));
}

TEST_CASE("snapshots are captured at the nearest step times") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    cfg.dt_divisor = 50;
    double Th = cfg.Th();
    EvolveResult res = evolve(cfg, {-Th, 0.0, Th});
    REQUIRE(res.snapshots.size() == 3);
    REQUIRE(res.snapshot_times.size() == 3);
    CHECK(res.snapshot_times.front() == doctest::Approx(-Th));
    CHECK(res.snapshot_times.back() == doctest::Approx(Th));
    CHECK(sup_norm_diff(res.snapshots.rbegin()->second, res.u_final) == 0.0);
}
