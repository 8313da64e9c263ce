#include "nlslab/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nlslab {

namespace {

double norm(const Point& x, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += x[d] * x[d];
    return std::sqrt(s);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Point parse_point(const std::string& v, int dim) {
    std::istringstream ss(v);
    Point p{};
    for (int d = 0; d < dim; ++d)
        if (!(ss >> p[d])) throw std::invalid_argument("config: expected " + std::to_string(dim) +
                                                       " numbers in '" + v + "'");
    return p;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_point(const Point& p, int dim) {
    std::string s;
    for (int d = 0; d < dim; ++d) {
        if (d) s += ' ';
        s += fmt(p[d]);
    }
    return s;
}

Profile parse_profile(const std::map<std::string, std::string>& kv, const std::string& prefix,
                      int dim) {
    auto get = [&](const std::string& key) -> std::string {
        auto it = kv.find(prefix + "." + key);
        if (it == kv.end())
            throw std::invalid_argument("config: missing key " + prefix + "." + key);
        return it->second;
    };
    std::string kind = get("kind");
    Point center = parse_point(get("center"), dim);
    double amp = std::stod(get("amplitude"));
    if (kind == "bump") return make_bump(dim, center, std::stod(get("radius")), amp);
    if (kind == "plateau")
        return make_plateau(dim, center, std::stod(get("inner_radius")),
                            std::stod(get("outer_radius")), amp);
    throw std::invalid_argument("config: unknown profile kind '" + kind + "'");
}

const char* kKnownKeys[] = {
    "dim", "h", "T", "T0", "R", "K", "xi",
    "alpha.kind", "alpha.center", "alpha.amplitude", "alpha.radius", "alpha.inner_radius",
    "alpha.outer_radius",
    "psi.kind", "psi.center", "psi.amplitude", "psi.radius", "psi.inner_radius",
    "psi.outer_radius",
    "box.min", "box.max", "grid.dx_factor", "dt.divisor", "solver.mass_drift_abort",
    "measure.start", "measure.stop", "measure.spacing", "output.dir"};

}  // namespace

ExperimentConfig canonical_config_1d() {
    ExperimentConfig cfg;
    cfg.dim = 1;
    cfg.h = 0.1;
    cfg.T = 1.0;
    cfg.T0 = 1.0;
    cfg.R = 16.0;
    cfg.K = 1.0;
    cfg.xi = {1.0, 0.0, 0.0};
    // The envelope glue is kept wide (2.5 -> 16) and the nonlinearity gentle
    // (amplitude 0.05): the h-expansion of the packet is only asymptotic once
    // h * (second correction) is small against h^{1/2} * (first correction),
    // and both knobs control the second correction (via Lap^2 psi and the
    // bump derivatives of alpha respectively). With these values the h in
    // {0.2, ..., 0.025} sweep sits in the asymptotic regime.
    cfg.alpha = make_bump(1, Point{}, 1.0, 0.05);
    cfg.psi = make_plateau(1, Point{}, 2.5, 16.0, 1.0);
    cfg.box_min = {-48.0, 0.0, 0.0};
    cfg.box_max = {52.0, 0.0, 0.0};
    return cfg;
}

ExperimentConfig parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected 'key = value': " + line);
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : kKnownKeys)
            if (key == k) known = true;
        if (!known) throw std::invalid_argument("config: unknown key '" + key + "'");
        kv[key] = val;
    }

    ExperimentConfig cfg = canonical_config_1d();
    auto opt = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };
    if (auto* v = opt("dim")) cfg.dim = std::stoi(*v);
    if (auto* v = opt("h")) cfg.h = std::stod(*v);
    if (auto* v = opt("T")) cfg.T = std::stod(*v);
    if (auto* v = opt("T0")) cfg.T0 = std::stod(*v);
    if (auto* v = opt("R")) cfg.R = std::stod(*v);
    if (auto* v = opt("K")) cfg.K = std::stod(*v);
    if (auto* v = opt("xi")) cfg.xi = parse_point(*v, cfg.dim);
    else if (cfg.dim > 1) { cfg.xi = Point{}; cfg.xi[0] = 1.0; }
    if (kv.count("alpha.kind")) cfg.alpha = parse_profile(kv, "alpha", cfg.dim);
    else cfg.alpha.dim = cfg.dim;
    if (kv.count("psi.kind")) cfg.psi = parse_profile(kv, "psi", cfg.dim);
    else cfg.psi.dim = cfg.dim;
    if (auto* v = opt("box.min")) cfg.box_min = parse_point(*v, cfg.dim);
    if (auto* v = opt("box.max")) cfg.box_max = parse_point(*v, cfg.dim);
    if (auto* v = opt("grid.dx_factor")) cfg.dx_factor = std::stod(*v);
    if (auto* v = opt("dt.divisor")) cfg.dt_divisor = std::stod(*v);
    if (auto* v = opt("solver.mass_drift_abort")) cfg.mass_drift_abort = std::stod(*v);
    if (auto* v = opt("measure.start")) cfg.measure_start = std::stod(*v);
    if (auto* v = opt("measure.stop")) cfg.measure_stop = std::stod(*v);
    if (auto* v = opt("measure.spacing")) cfg.measure_spacing = std::stod(*v);
    if (auto* v = opt("output.dir")) cfg.out_dir = *v;
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    return parse_config(is);
}

std::string emit_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "dim = " << cfg.dim << "\n";
    os << "h = " << fmt(cfg.h) << "\n";
    os << "T = " << fmt(cfg.T) << "\n";
    os << "T0 = " << fmt(cfg.T0) << "\n";
    os << "R = " << fmt(cfg.R) << "\n";
    os << "K = " << fmt(cfg.K) << "\n";
    os << "xi = " << fmt_point(cfg.xi, cfg.dim) << "\n";
    auto emit_profile = [&](const char* name, const Profile& p) {
        os << name << ".kind = " << (p.kind == ProfileKind::Bump ? "bump" : "plateau") << "\n";
        os << name << ".center = " << fmt_point(p.center, cfg.dim) << "\n";
        os << name << ".amplitude = " << fmt(p.amplitude) << "\n";
        if (p.kind == ProfileKind::Bump)
            os << name << ".radius = " << fmt(p.radius) << "\n";
        else {
            os << name << ".inner_radius = " << fmt(p.inner_radius) << "\n";
            os << name << ".outer_radius = " << fmt(p.outer_radius) << "\n";
        }
    };
    emit_profile("alpha", cfg.alpha);
    emit_profile("psi", cfg.psi);
    os << "box.min = " << fmt_point(cfg.box_min, cfg.dim) << "\n";
    os << "box.max = " << fmt_point(cfg.box_max, cfg.dim) << "\n";
    os << "grid.dx_factor = " << fmt(cfg.dx_factor) << "\n";
    os << "dt.divisor = " << fmt(cfg.dt_divisor) << "\n";
    os << "solver.mass_drift_abort = " << fmt(cfg.mass_drift_abort) << "\n";
    os << "measure.start = " << fmt(cfg.measure_start) << "\n";
    os << "measure.stop = " << fmt(cfg.measure_stop) << "\n";
    os << "measure.spacing = " << fmt(cfg.measure_spacing) << "\n";
    os << "output.dir = " << cfg.out_dir << "\n";
    return os.str();
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.dim < 1 || cfg.dim > 3) throw std::invalid_argument("requires dim in {1,2,3}");
    if (!(cfg.h > 0.0 && cfg.h < 1.0)) throw std::invalid_argument("requires 0 < h < 1");
    if (std::abs(norm(cfg.xi, cfg.dim) - 1.0) > 1e-12)
        throw std::invalid_argument("requires |xi| = 1");
    if (!(cfg.T0 > 0.0)) throw std::invalid_argument("requires T0 > 0");
    if (!(cfg.T > cfg.T0 / 2.0)) throw std::invalid_argument("requires T > T0/2");
    if (!(cfg.R > 0.0)) throw std::invalid_argument("requires R > 0");
    if (cfg.K == 0.0) throw std::invalid_argument("requires K != 0");
    if (cfg.alpha.dim != cfg.dim || cfg.psi.dim != cfg.dim)
        throw std::invalid_argument("profile dimension must match dim");
    if (cfg.alpha.amplitude < 0.0) throw std::invalid_argument("requires alpha >= 0");
    if (cfg.alpha.support_bound_from_origin() > cfg.T0 + 1e-12)
        throw std::invalid_argument("alpha support must lie in B(0,T0)");
    if (cfg.psi.kind != ProfileKind::Plateau)
        throw std::invalid_argument("psi must be a plateau");
    if (cfg.psi.amplitude != cfg.K)
        throw std::invalid_argument("psi plateau value must equal K");
    if (cfg.psi.support_bound_from_origin() > cfg.R + 1e-12)
        throw std::invalid_argument("psi support must lie in B(0,R)");
    if (norm(cfg.psi.center, cfg.dim) > 1e-12 || cfg.psi.inner_radius < 2.0 * cfg.T0 - 1e-12)
        throw std::invalid_argument("psi must be constant on B(0,2T0)");
    for (int d = 0; d < cfg.dim; ++d)
        if (!(cfg.box_max[d] > cfg.box_min[d]))
            throw std::invalid_argument("degenerate box on axis " + std::to_string(d));
    if (!(cfg.dx_factor > 0.0) || !(cfg.dt_divisor > 0.0))
        throw std::invalid_argument("grid.dx_factor and dt.divisor must be positive");
    if (!(cfg.measure_spacing > 0.0) || !(cfg.measure_start > cfg.measure_stop))
        throw std::invalid_argument("measurement path must descend from start to stop");
}

FieldGrid build_grid(const ExperimentConfig& cfg) {
    std::vector<std::pair<double, double>> ext;
    std::vector<std::size_t> counts;
    double dx_max = std::numbers::pi * cfg.h / cfg.dx_factor;
    for (int d = 0; d < cfg.dim; ++d) {
        double L = cfg.box_max[d] - cfg.box_min[d];
        std::size_t n = 8;
        while (L / double(n) > dx_max) n <<= 1;
        ext.push_back({cfg.box_min[d], cfg.box_max[d]});
        counts.push_back(n);
    }
    return make_grid(cfg.dim, ext, counts);
}

StepPolicy build_steps(const ExperimentConfig& cfg) {
    auto n = std::size_t(std::llround(2.0 * cfg.T * cfg.dt_divisor));
    if (n == 0) n = 1;
    return StepPolicy{2.0 * cfg.Th() / double(n), n};
}

std::vector<double> measurement_offsets(const ExperimentConfig& cfg) {
    std::vector<double> s;
    auto count = std::size_t((cfg.measure_start - cfg.measure_stop) / cfg.measure_spacing) + 1;
    s.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        s.push_back(cfg.measure_start - double(i) * cfg.measure_spacing);
    return s;
}

}  // namespace nlslab
