#include "nlslab/recovery.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "nlslab/fft.hpp"
#include "nlslab/solver.hpp"

namespace nlslab {

namespace {

std::vector<Point> measurement_points(const ExperimentConfig& cfg) {
    std::vector<Point> pts;
    for (double s : measurement_offsets(cfg)) {
        Point p{};
        for (int d = 0; d < cfg.dim; ++d) p[d] = s * cfg.xi[d];
        pts.push_back(p);
    }
    return pts;
}

double xalpha_truth(const ExperimentConfig& cfg, const Point& x0) {
    return xray_transform(cfg.alpha, x0, cfg.xi);
}

}  // namespace

MeasurementLine measure_packet(const ComplexField& u_final, const ExperimentConfig& cfg,
                               const std::vector<Point>& x0_samples) {
    MeasurementLine line;
    line.xi = cfg.xi;
    line.x0 = x0_samples;
    std::vector<Point> lab;
    for (const auto& x0 : x0_samples) {
        Point p{};
        for (int d = 0; d < cfg.dim; ++d) {
            p[d] = 4.0 * cfg.T * cfg.xi[d] + x0[d];
            double lo = u_final.grid.axis[d].x_min;
            double hi = lo + u_final.grid.extent(d);
            if (p[d] < lo || p[d] > hi)
                throw std::invalid_argument("measure_packet: sample point outside the box");
        }
        lab.push_back(p);
    }
    std::vector<cdouble> samples = fourier_interp(u_final, lab);
    double sqh = std::sqrt(cfg.h);
    for (std::size_t m = 0; m < lab.size(); ++m) {
        double x0_dot_xi = 0.0;
        for (int d = 0; d < cfg.dim; ++d) x0_dot_xi += x0_samples[m][d] * cfg.xi[d];
        cdouble w = samples[m] * sqh / cfg.K *
                    std::polar(1.0, -(3.0 * cfg.T + x0_dot_xi) / cfg.h);
        if (std::abs(w) < 0.1)
            throw std::runtime_error("measure_packet: |w| < 0.1, signal lost at a sample point");
        line.w.push_back(w);
        line.theta.push_back(-std::arg(w));
    }
    return line;
}

RecoveryResult unwrap_phase(const MeasurementLine& line, double K) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    RecoveryResult res;
    res.x0 = line.x0;
    res.theta = line.theta;
    res.g.resize(line.theta.size());
    res.xalpha.resize(line.theta.size());
    if (line.theta.empty()) return res;

    // Anchor: X_alpha = 0 there by geometry, so pick g making theta+2*pi*g
    // nearest zero, then propagate by continuity.
    res.g[0] = std::lround(-line.theta[0] / two_pi);
    for (std::size_t m = 1; m < line.theta.size(); ++m) {
        double incr = line.theta[m] - line.theta[m - 1];
        long hop = std::lround(-incr / two_pi);
        res.g[m] = res.g[m - 1] + hop;
        double residual = incr + two_pi * double(hop);
        if (std::abs(residual) > 0.9 * std::numbers::pi)
            throw std::runtime_error("unwrap_phase: sampling too coarse (increment ambiguity)");
    }
    for (std::size_t m = 0; m < line.theta.size(); ++m)
        res.xalpha[m] = (line.theta[m] + two_pi * double(res.g[m])) / (K * K);
    return res;
}

RecoveryResult recover_xalpha_from_field(const ExperimentConfig& cfg,
                                         const ComplexField& u_final) {
    MeasurementLine line = measure_packet(u_final, cfg, measurement_points(cfg));
    RecoveryResult res = unwrap_phase(line, cfg.K);
    res.xalpha_true.resize(res.x0.size());
    for (std::size_t m = 0; m < res.x0.size(); ++m) {
        res.xalpha_true[m] = xalpha_truth(cfg, res.x0[m]);
        res.sup_error = std::max(res.sup_error, std::abs(res.xalpha[m] - res.xalpha_true[m]));
    }
    return res;
}

RecoveryResult recover_xalpha(const ExperimentConfig& cfg) {
    EvolveResult ev = evolve(cfg);
    return recover_xalpha_from_field(cfg, ev.u_final);
}

RecoveryResult synthetic_xalpha(const ExperimentConfig& cfg) {
    RecoveryResult res;
    res.x0 = measurement_points(cfg);
    res.theta.assign(res.x0.size(), 0.0);
    res.g.assign(res.x0.size(), 0);
    for (const auto& x0 : res.x0) {
        double v = xalpha_truth(cfg, x0);
        res.xalpha.push_back(v);
        res.xalpha_true.push_back(v);
    }
    return res;
}

Reconstruction1D reconstruct_alpha_1d(const ExperimentConfig& cfg, const RecoveryResult& res) {
    if (cfg.dim != 1) throw std::invalid_argument("reconstruct_alpha_1d: needs dim = 1");
    std::vector<double> xa = res.xalpha;
    std::vector<double> recon = recover_alpha_1d(xa, -cfg.measure_spacing);
    Reconstruction1D out;
    double l2 = 0.0;
    for (std::size_t m = 0; m < recon.size(); ++m) {
        out.x.push_back(res.x0[m][0]);
        out.alpha.push_back(recon[m]);
        double truth = cfg.alpha.eval(res.x0[m]);
        out.alpha_true.push_back(truth);
        double e = recon[m] - truth;
        out.sup_error = std::max(out.sup_error, std::abs(e));
        l2 += e * e;
    }
    out.l2_error = std::sqrt(l2 * cfg.measure_spacing);
    return out;
}

Reconstruction2D reconstruct_alpha_2d(const ExperimentConfig& cfg, const Sinogram& sino,
                                      const FieldGrid& out_grid) {
    if (cfg.dim != 2) throw std::invalid_argument("reconstruct_alpha_2d: needs dim = 2");
    if (sino.angles.size() < 8)
        throw std::invalid_argument("reconstruct_alpha_2d: insufficient angular coverage (< 8)");
    Reconstruction2D out;
    out.alpha = fbp_invert_2d(sino, out_grid);
    double num = 0.0, den = 0.0;
    double r_roi = 1.5 * cfg.alpha.support_radius();
    for (std::size_t k = 0; k < out.alpha.values.size(); ++k) {
        Point x = out_grid.node(k);
        double r = 0.0;
        for (int d = 0; d < 2; ++d)
            r += (x[d] - cfg.alpha.center[d]) * (x[d] - cfg.alpha.center[d]);
        if (std::sqrt(r) > r_roi) continue;
        double truth = cfg.alpha.eval(x);
        double e = out.alpha.values[k].real() - truth;
        num += e * e;
        den += truth * truth;
    }
    out.rel_l2_error = den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
    return out;
}

void write_recovery_csv(const RecoveryResult& res, int dim, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    for (int d = 0; d < dim; ++d) os << "x0_" << d << ",";
    os << "theta,g,xalpha_recovered,xalpha_true,abs_err\n";
    char buf[64];
    for (std::size_t m = 0; m < res.x0.size(); ++m) {
        for (int d = 0; d < dim; ++d) {
            std::snprintf(buf, sizeof buf, "%.17g,", res.x0[m][d]);
            os << buf;
        }
        double truth = m < res.xalpha_true.size() ? res.xalpha_true[m] : 0.0;
        std::snprintf(buf, sizeof buf, "%.17g,", res.theta[m]);
        os << buf << res.g[m];
        std::snprintf(buf, sizeof buf, ",%.17g", res.xalpha[m]);
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.17g", truth);
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.17g\n", std::abs(res.xalpha[m] - truth));
        os << buf;
    }
}

}  // namespace nlslab
