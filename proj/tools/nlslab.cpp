// Experiment runner for the alpha-NLS wave-packet laboratory.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nlslab/ansatz.hpp"
#include "nlslab/config.hpp"
#include "nlslab/recovery.hpp"
#include "nlslab/solver.hpp"
#include "nlslab/sweep.hpp"
#include "nlslab/xray.hpp"

namespace fs = std::filesystem;
using namespace nlslab;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir = "out";
    double h_override = 0.0;
    int dim_override = 0;
    std::string h_list_csv;
};

ExperimentConfig load(const CommonOpts& opts) {
    ExperimentConfig cfg =
        opts.config_path.empty() ? canonical_config_1d() : parse_config_file(opts.config_path);
    if (opts.h_override > 0.0) cfg.h = opts.h_override;
    if (opts.dim_override > 0) cfg.dim = opts.dim_override;
    cfg.out_dir = opts.out_dir;
    validate_config(cfg);
    fs::create_directories(cfg.out_dir);
    return cfg;
}

std::vector<double> parse_h_list(const std::string& csv) {
    std::vector<double> hs;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) hs.push_back(std::stod(tok));
    return hs;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config file");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--h", opts.h_list_csv, "override h (comma list for sweep)");
    cmd->add_option("--dim", opts.dim_override, "override dimension");
}

void apply_single_h(CommonOpts& opts) {
    if (!opts.h_list_csv.empty()) {
        auto hs = parse_h_list(opts.h_list_csv);
        if (hs.size() != 1) throw CLI::ValidationError("--h", "expected a single value here");
        opts.h_override = hs[0];
    }
}

int cmd_solve(CommonOpts opts) {
    apply_single_h(opts);
    ExperimentConfig cfg = load(opts);
    EvolveResult res = evolve(cfg);
    dump_field(res.u_final, (fs::path(cfg.out_dir) / "final.nlsf").string());
    write_diagnostics_csv(res.diagnostics, (fs::path(cfg.out_dir) / "diagnostics.csv").string());
    std::cout << "mass_drift " << res.mass_drift << "\nenergy_drift " << res.energy_drift << "\n";
    return 0;
}

int cmd_ansatz(CommonOpts opts, bool check_steps) {
    apply_single_h(opts);
    ExperimentConfig cfg = load(opts);
    FieldGrid grid = build_grid(cfg);
    double t = cfg.Th();
    ComplexField v = assemble_v(cfg, t, grid);
    ComplexField a1 = solve_a1(cfg, grid, t, 2000, check_steps);
    dump_field(v, (fs::path(cfg.out_dir) / "v.nlsf").string());
    dump_field(a1, (fs::path(cfg.out_dir) / "a1.nlsf").string());
    std::ofstream diag(fs::path(cfg.out_dir) / "a1_diagnostics.csv");
    diag << "t_prime,sup_abs_a1,residual_sup\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t / cfg.h, sup_norm(a1), 0.0);
    diag << buf;
    std::cout << "sup|a1| " << sup_norm(a1) << "\n";
    return 0;
}

int cmd_compare(CommonOpts opts) {
    apply_single_h(opts);
    ExperimentConfig cfg = load(opts);
    double Th = cfg.Th();
    std::vector<double> check_times = {-Th, 0.0, Th / 2.0, Th};
    EvolveResult ev = evolve(cfg, check_times);
    double err_v = 0.0, err_u1 = 0.0;
    std::size_t si = 0;
    for (const auto& [step, u] : ev.snapshots) {
        double t = ev.snapshot_times[si++];
        err_v = std::max(err_v, sup_norm_diff(u, assemble_v(cfg, t, u.grid)));
        err_u1 = std::max(err_u1, sup_norm_diff(u, assemble_uN(cfg, t, u.grid, 1)));
    }
    std::ofstream os(fs::path(cfg.out_dir) / "compare.txt");
    os << "err_v " << err_v << "\nerr_u1 " << err_u1 << "\n";
    std::cout << "err_v " << err_v << "\nerr_u1 " << err_u1 << "\n";
    return 0;
}

int cmd_xray(CommonOpts opts, std::size_t n_angles, std::size_t n_offsets) {
    apply_single_h(opts);
    ExperimentConfig cfg = load(opts);
    if (cfg.dim == 1) {
        RecoveryResult res = synthetic_xalpha(cfg);
        write_recovery_csv(res, 1, (fs::path(cfg.out_dir) / "xalpha.csv").string());
        Reconstruction1D rec = reconstruct_alpha_1d(cfg, res);
        std::cout << "sup_err " << rec.sup_error << "\n";
        return 0;
    }
    double offset_max = cfg.T0 + 1.0;
    Sinogram sino = forward_project(cfg.alpha, n_angles, n_offsets, offset_max);
    write_sinogram_csv(sino, (fs::path(cfg.out_dir) / "sinogram.csv").string());
    FieldGrid out_grid = make_grid(
        2, {{-2.0 * cfg.T0, 2.0 * cfg.T0}, {-2.0 * cfg.T0, 2.0 * cfg.T0}}, {256, 256});
    Reconstruction2D rec = reconstruct_alpha_2d(cfg, sino, out_grid);
    dump_field(rec.alpha, (fs::path(cfg.out_dir) / "alpha_fbp.nlsf").string());
    std::cout << "rel_l2_err " << rec.rel_l2_error << "\n";
    return 0;
}

int cmd_recover(CommonOpts opts, bool synthetic) {
    apply_single_h(opts);
    ExperimentConfig cfg = load(opts);
    RecoveryResult res = synthetic ? synthetic_xalpha(cfg) : recover_xalpha(cfg);
    write_recovery_csv(res, cfg.dim, (fs::path(cfg.out_dir) / "recovery.csv").string());
    if (cfg.dim == 1) {
        Reconstruction1D rec = reconstruct_alpha_1d(cfg, res);
        std::ofstream os(fs::path(cfg.out_dir) / "alpha_1d.csv");
        os << "x,alpha_recovered,alpha_true\n";
        char buf[128];
        for (std::size_t i = 0; i < rec.x.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", rec.x[i], rec.alpha[i],
                          rec.alpha_true[i]);
            os << buf;
        }
        std::cout << "xalpha_sup_err " << res.sup_error << "\nalpha_sup_err " << rec.sup_error
                  << "\n";
    } else {
        std::cout << "xalpha_sup_err " << res.sup_error << "\n";
    }
    return 0;
}

int cmd_sweep(CommonOpts opts, bool with_recovery) {
    ExperimentConfig cfg = load(opts);
    std::vector<double> hs = opts.h_list_csv.empty()
                                 ? std::vector<double>{0.2, 0.1, 0.05}
                                 : parse_h_list(opts.h_list_csv);
    SweepReport rep = with_recovery ? run_recovery_experiment(cfg, hs, /*also_errors=*/true)
                                    : run_convergence_sweep(cfg, hs);
    write_sweep_artifacts(rep, cfg.out_dir);
    std::cout << "slope_v " << rep.slope_v.slope << "\nslope_u1 " << rep.slope_u1.slope
              << "\nslope_xalpha " << rep.slope_xalpha.slope << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alpha-NLS wave-packet laboratory"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool synthetic = false, with_recovery = false, check_steps = false;
    std::size_t n_angles = 180, n_offsets = 401;

    auto* solve = app.add_subcommand("solve", "evolve the NLS and dump the final field");
    add_common(solve, opts);
    auto* ansatz = app.add_subcommand("ansatz", "assemble the approximate solution");
    add_common(ansatz, opts);
    ansatz->add_flag("--check-steps", check_steps, "verify the correction step size");
    auto* compare = app.add_subcommand("compare", "sup errors between solver and ansatz");
    add_common(compare, opts);
    auto* xraycmd = app.add_subcommand("xray", "transform tables / FBP reconstruction");
    add_common(xraycmd, opts);
    xraycmd->add_option("--angles", n_angles, "sinogram angle count");
    xraycmd->add_option("--offsets", n_offsets, "sinogram offset count");
    auto* recover = app.add_subcommand("recover", "recover X_alpha and alpha");
    add_common(recover, opts);
    recover->add_flag("--synthetic", synthetic, "quadrature ground truth, no solver");
    auto* sweep = app.add_subcommand("sweep", "h-convergence sweep");
    add_common(sweep, opts);
    sweep->add_flag("--recover", with_recovery, "include end-to-end recovery per h");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (solve->parsed()) return cmd_solve(opts);
        if (ansatz->parsed()) return cmd_ansatz(opts, check_steps);
        if (compare->parsed()) return cmd_compare(opts);
        if (xraycmd->parsed()) return cmd_xray(opts, n_angles, n_offsets);
        if (recover->parsed()) return cmd_recover(opts, synthetic);
        if (sweep->parsed()) return cmd_sweep(opts, with_recovery);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
