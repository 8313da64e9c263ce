#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "nlslab/ansatz.hpp"
#include "nlslab/solver.hpp"

using namespace nlslab;

namespace {

double phase_riemann(const ExperimentConfig& cfg, const Point& y, double t_prime,
                     std::size_t n) {
    double upper = t_prime + cfg.T;
    double ds = upper / double(n), sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double s = (double(i) + 0.5) * ds;
        Point p{};
        for (int d = 0; d < cfg.dim; ++d) p[d] = y[d] + 2.0 * cfg.xi[d] * s;
        sum += cfg.alpha.eval(p);
    }
    return sum * ds;
}

}  // namespace

TEST_CASE("phase integral matches a brute-force Riemann oracle") {
    ExperimentConfig cfg = canonical_config_1d();
    for (double tp : {-0.5, 0.0, 1.0}) {
        for (double y : {-2.1, -0.3, 0.4}) {
            double got = phase_integral(cfg, {y, 0.0, 0.0}, tp);
            double oracle = phase_riemann(cfg, {y, 0.0, 0.0}, tp, 2000000);
            CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("phase integral vanishes when the ray misses the support") {
    ExperimentConfig cfg = canonical_config_1d();
    // y far on the outgoing side: the forward characteristic never meets B(0,T0)
    CHECK(phase_integral(cfg, {2.0, 0.0, 0.0}, 1.0) == 0.0);
}

TEST_CASE("leading amplitude reduces to psi at the initial time") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);
    ComplexField a0 = eval_a0(cfg, -cfg.Th(), grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        err = std::max(err, std::abs(a0[i] - cdouble{cfg.psi.eval(grid.node(i)), 0.0}));
    CHECK(err < 1e-13);
}

TEST_CASE("zero nonlinearity turns a0 into pure transport") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    cfg.alpha.amplitude = 0.0;
    double t = 0.7 * cfg.Th();
    FieldGrid grid = build_grid(cfg);
    ComplexField a0 = eval_a0(cfg, t, grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Point x = grid.node(i);
        Point y{x[0] - 2.0 * t / cfg.h - 2.0 * cfg.T, 0.0, 0.0};
        err = std::max(err, std::abs(a0[i] - cdouble{cfg.psi.eval(y), 0.0}));
    }
    CHECK(err < 1e-13);
}

TEST_CASE("|a0| equals the transported envelope at every sampled time") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);
    for (double frac : {-1.0, -0.25, 0.5, 1.0}) {
        double t = frac * cfg.Th();
        ComplexField a0 = eval_a0(cfg, t, grid);
        double err = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Point x = grid.node(i);
            Point y{x[0] - 2.0 * t / cfg.h - 2.0 * cfg.T, 0.0, 0.0};
            err = std::max(err, std::abs(std::abs(a0[i]) - cfg.psi.eval(y)));
        }
        CHECK(err < 1e-14);
    }
}

TEST_CASE("first correction vanishes at the initial time") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);
    ComplexField a1 = solve_a1(cfg, grid, -cfg.Th(), 64);
    CHECK(sup_norm(a1) == 0.0);
}

TEST_CASE("first correction closed form when the nonlinearity is off") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    cfg.alpha.amplitude = 0.0;
    FieldGrid grid = build_grid(cfg);
    double t = cfg.Th();  // t' = T
    double t_prime = t / cfg.h;
    ComplexField a1 = solve_a1(cfg, grid, t, 500);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Point x = grid.node(i);
        Point w{x[0] - 2.0 * t_prime - 2.0 * cfg.T, 0.0, 0.0};
        cdouble want = cdouble{0.0, t_prime + cfg.T} * cfg.psi.laplacian_fd(w);
        err = std::max(err, std::abs(a1[i] - want));
    }
    CHECK(err < 1e-6);
}

TEST_CASE("first correction self-converges at fourth order") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    // single probe characteristic through the interesting region
    double t_prime = cfg.T;
    Point x{2.0 * t_prime + 2.0 * cfg.T - 0.4, 0.0, 0.0};  // transported arg w = -0.4
    cdouble c1 = a1_value(cfg, t_prime, x, 40);
    cdouble c2 = a1_value(cfg, t_prime, x, 80);
    cdouble c3 = a1_value(cfg, t_prime, x, 160);
    cdouble c4 = a1_value(cfg, t_prime, x, 320);
    double e1 = std::abs(c1 - c2), e2 = std::abs(c2 - c3), e3 = std::abs(c3 - c4);
    CHECK(std::log2(e1 / e2) >= 3.7);
    CHECK(std::log2(e2 / e3) >= 3.7);
}

TEST_CASE("halved-step check passes at the production step count") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    FieldGrid grid = build_grid(cfg);
    CHECK_NOTHROW(solve_a1(cfg, grid, cfg.Th(), 2000, /*check_halved_step=*/true));
}

TEST_CASE("assembled ansatz matches the solver initial data at t = -Th") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);
    ComplexField v = assemble_v(cfg, -cfg.Th(), grid);
    ComplexField u0 = initial_data(cfg, grid);
    CHECK(sup_norm_diff(v, u0) < 1e-10 * sup_norm(u0));
}

TEST_CASE("assembled ansatz keeps the scaled envelope modulus") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.1;
    FieldGrid grid = build_grid(cfg);
    double t = 0.3 * cfg.Th();
    ComplexField v = assemble_v(cfg, t, grid);
    double scale = 1.0 / std::sqrt(cfg.h);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Point x = grid.node(i);
        Point y{x[0] - 2.0 * t / cfg.h - 2.0 * cfg.T, 0.0, 0.0};
        err = std::max(err, std::abs(std::abs(v[i]) - scale * cfg.psi.eval(y)));
    }
    CHECK(err < 1e-12 * scale);
}

TEST_CASE("corrected ansatz differs from v by at most h^{1/2} sup|a1|") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    FieldGrid grid = build_grid(cfg);
    double t = cfg.Th();
    ComplexField v = assemble_v(cfg, t, grid);
    ComplexField u1 = assemble_uN(cfg, t, grid, 1, 400);
    ComplexField a1 = solve_a1(cfg, grid, t, 400);
    double bound = std::sqrt(cfg.h) * sup_norm(a1);
    CHECK(sup_norm_diff(u1, v) <= bound * (1.0 + 1e-12));
    CHECK(sup_norm_diff(u1, v) > 0.0);  // the correction actually does something
}

TEST_CASE("assemble_uN with N=0 is exactly assemble_v") {
    ExperimentConfig cfg = canonical_config_1d();
    cfg.h = 0.2;
    FieldGrid grid = build_grid(cfg);
    double t = 0.5 * cfg.Th();
    CHECK(sup_norm_diff(assemble_uN(cfg, t, grid, 0), assemble_v(cfg, t, grid)) == 0.0);
}
