#include "nlslab/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "nlslab/ansatz.hpp"
#include "nlslab/solver.hpp"

namespace nlslab {

namespace {

// Plain least squares in log-log space; usable from 2 points.
SlopeFit ls_fit(const std::vector<double>& h, const std::vector<double>& err) {
    SlopeFit fit;
    std::size_t n = h.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double x = std::log(h[i]);
        double y = std::log(std::max(err[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double denom = double(n) * sxx - sx * sx;
    fit.slope = (double(n) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / double(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = std::log(std::max(err[i], 1e-300)) - (fit.intercept + fit.slope * std::log(h[i]));
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / double(n));
    double max_err = 0.0;
    for (double e : err) max_err = std::max(max_err, e);
    fit.degenerate = max_err < 1e-8;
    return fit;
}

SweepReport run_sweep(const ExperimentConfig& base, const std::vector<double>& h_list,
                      bool with_recovery, bool with_errors, std::size_t a1_steps) {
    if (h_list.empty()) throw std::invalid_argument("sweep: empty h list");
    for (std::size_t i = 1; i < h_list.size(); ++i)
        if (!(h_list[i] < h_list[i - 1]))
            throw std::invalid_argument("sweep: h list must be strictly decreasing");

    SweepReport rep;
    std::vector<double> hs, errs_v, errs_u1, errs_xa;
    for (double h : h_list) {
        ExperimentConfig cfg = base;
        cfg.h = h;
        validate_config(cfg);
        double Th = cfg.Th();
        std::vector<double> check_times = {-Th, 0.0, Th / 2.0, Th};

        auto t_start = std::chrono::steady_clock::now();
        EvolveResult ev = evolve(cfg, with_errors ? check_times : std::vector<double>{});

        SweepRow row;
        row.h = h;
        row.mass_drift = ev.mass_drift;
        row.energy_drift = ev.energy_drift;

        if (with_errors) {
            FieldGrid grid = ev.u_final.grid;
            std::size_t si = 0;
            for (const auto& [step, u] : ev.snapshots) {
                double t = ev.snapshot_times[si++];
                ComplexField v = assemble_v(cfg, t, grid);
                ComplexField u1 = assemble_uN(cfg, t, grid, 1, a1_steps);
                row.err_v = std::max(row.err_v, sup_norm_diff(u, v));
                row.err_u1 = std::max(row.err_u1, sup_norm_diff(u, u1));
            }
        }
        if (with_recovery) {
            RecoveryResult rec = recover_xalpha_from_field(cfg, ev.u_final);
            row.err_xalpha = rec.sup_error;
            errs_xa.push_back(rec.sup_error);
            rep.recoveries.push_back(std::move(rec));
        }
        row.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
                         .count();

        hs.push_back(h);
        if (with_errors) {
            errs_v.push_back(row.err_v);
            errs_u1.push_back(row.err_u1);
            row.slope_v_running = hs.size() >= 2 ? ls_fit(hs, errs_v).slope : 0.0;
        }
        rep.rows.push_back(row);
    }

    if (with_errors && hs.size() >= 3) {
        rep.slope_v = ls_fit(hs, errs_v);
        rep.slope_u1 = ls_fit(hs, errs_u1);
        rep.rate_established = rep.slope_v.rms_residual < 0.3;
    }
    if (with_recovery && hs.size() >= 3) rep.slope_xalpha = ls_fit(hs, errs_xa);
    return rep;
}

}  // namespace

SlopeFit fit_slope(const std::vector<double>& h, const std::vector<double>& err) {
    if (h.size() < 3 || h.size() != err.size())
        throw std::invalid_argument("fit_slope: need >= 3 matching samples");
    return ls_fit(h, err);
}

SweepReport run_convergence_sweep(const ExperimentConfig& cfg, const std::vector<double>& h_list,
                                  std::size_t a1_steps) {
    if (h_list.size() < 3)
        throw std::invalid_argument("run_convergence_sweep: need >= 3 h values");
    return run_sweep(cfg, h_list, /*with_recovery=*/false, /*with_errors=*/true, a1_steps);
}

SweepReport run_recovery_experiment(const ExperimentConfig& cfg, const std::vector<double>& h_list,
                                    bool also_errors, std::size_t a1_steps) {
    return run_sweep(cfg, h_list, /*with_recovery=*/true, also_errors, a1_steps);
}

void write_sweep_artifacts(const SweepReport& rep, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    char buf[512];

    std::ofstream csv(fs::path(dir) / "sweep.csv");
    if (!csv) throw std::runtime_error("cannot open sweep.csv in " + dir);
    csv << "h,err_v,err_u1,err_xalpha,slope_v_running,mass_drift,energy_drift,wall_s\n";
    for (const auto& r : rep.rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.3f\n", r.h,
                      r.err_v, r.err_u1, r.err_xalpha, r.slope_v_running, r.mass_drift,
                      r.energy_drift, r.wall_s);
        csv << buf;
    }

    std::ofstream sum(fs::path(dir) / "summary.txt");
    auto put_fit = [&](const char* name, const SlopeFit& f) {
        std::snprintf(buf, sizeof buf, "%s: slope=%.6f intercept=%.6f rms_residual=%.6f%s\n",
                      name, f.slope, f.intercept, f.rms_residual,
                      f.degenerate ? " [degenerate]" : "");
        sum << buf;
    };
    put_fit("err_v", rep.slope_v);
    put_fit("err_u1", rep.slope_u1);
    put_fit("err_xalpha", rep.slope_xalpha);
    sum << "rate_established: " << (rep.rate_established ? "yes" : "no") << "\n";

    auto write_curve = [&](const char* name, auto getter) {
        std::ofstream dat(fs::path(dir) / name);
        for (const auto& r : rep.rows) {
            std::snprintf(buf, sizeof buf, "%.17g %.17g\n", r.h, getter(r));
            dat << buf;
        }
    };
    write_curve("err_v.dat", [](const SweepRow& r) { return r.err_v; });
    write_curve("err_u1.dat", [](const SweepRow& r) { return r.err_u1; });
    write_curve("err_xalpha.dat", [](const SweepRow& r) { return r.err_xalpha; });
}

}  // namespace nlslab
