#include "nlslab/xray.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gauss.hpp"

namespace nlslab {

namespace {

constexpr std::size_t kPanels = 64;

void require_unit(const Point& xi, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += xi[d] * xi[d];
    if (std::abs(std::sqrt(s) - 1.0) > 1e-12)
        throw std::invalid_argument("xray: direction must be a unit vector");
}

double norm(const Point& x, int dim) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) s += x[d] * x[d];
    return std::sqrt(s);
}

}  // namespace

double xray_transform(const Profile& alpha, const Point& x0, const Point& xi) {
    require_unit(xi, alpha.dim);
    // alpha(x0 + s*xi) vanishes for s > |x0| + T0.
    double s_max = norm(x0, alpha.dim) + alpha.support_bound_from_origin();
    auto f = [&](double s) {
        Point p;
        for (int d = 0; d < alpha.dim; ++d) p[d] = x0[d] + s * xi[d];
        return alpha.eval(p);
    };
    return 0.5 * detail::gauss_composite(f, 0.0, s_max, kPanels);
}

double pray_transform(const Profile& alpha, const Point& x0, const Point& xi) {
    Point neg{};
    for (int d = 0; d < alpha.dim; ++d) neg[d] = -xi[d];
    return 2.0 * (xray_transform(alpha, x0, xi) + xray_transform(alpha, x0, neg));
}

std::vector<double> recover_alpha_1d(const std::vector<double>& xa, double dx) {
    std::size_t n = xa.size();
    if (n < 5) throw std::invalid_argument("recover_alpha_1d: need at least 5 samples");
    std::vector<double> out(n);
    auto deriv = [&](std::size_t i) {
        if (i >= 2 && i + 2 < n)
            return (xa[i - 2] - 8 * xa[i - 1] + 8 * xa[i + 1] - xa[i + 2]) / (12 * dx);
        if (i == 0)
            return (-25 * xa[0] + 48 * xa[1] - 36 * xa[2] + 16 * xa[3] - 3 * xa[4]) / (12 * dx);
        if (i == 1)
            return (-3 * xa[0] - 10 * xa[1] + 18 * xa[2] - 6 * xa[3] + xa[4]) / (12 * dx);
        if (i == n - 2)
            return (3 * xa[n - 1] + 10 * xa[n - 2] - 18 * xa[n - 3] + 6 * xa[n - 4] - xa[n - 5]) /
                   (12 * dx);
        return (25 * xa[n - 1] - 48 * xa[n - 2] + 36 * xa[n - 3] - 16 * xa[n - 4] + 3 * xa[n - 5]) /
               (12 * dx);
    };
    for (std::size_t i = 0; i < n; ++i) out[i] = -2.0 * deriv(i);
    return out;
}

Sinogram forward_project(const Profile& alpha, std::size_t n_angles, std::size_t n_offsets,
                         double offset_max) {
    Sinogram sino;
    sino.angles.resize(n_angles);
    sino.offsets.resize(n_offsets);
    sino.values.resize(n_angles * n_offsets);
    for (std::size_t j = 0; j < n_angles; ++j)
        sino.angles[j] = std::numbers::pi * double(j) / double(n_angles);
    for (std::size_t k = 0; k < n_offsets; ++k)
        sino.offsets[k] = -offset_max + 2.0 * offset_max * double(k) / double(n_offsets - 1);
    for (std::size_t j = 0; j < n_angles; ++j) {
        double th = sino.angles[j];
        Point xi{std::cos(th), std::sin(th), 0.0};
        Point perp{-std::sin(th), std::cos(th), 0.0};
        for (std::size_t k = 0; k < n_offsets; ++k) {
            Point x0{sino.offsets[k] * perp[0], sino.offsets[k] * perp[1], 0.0};
            sino.at(j, k) = pray_transform(alpha, x0, xi);
        }
    }
    return sino;
}

namespace {

void require_uniform(const std::vector<double>& v, const char* what) {
    if (v.size() < 2) throw std::invalid_argument(std::string("fbp: too few ") + what);
    double d0 = v[1] - v[0];
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs((v[i] - v[0]) - double(i) * d0) > 1e-9 * std::max(1.0, std::abs(v.back())))
            throw std::invalid_argument(std::string("fbp: non-uniform ") + what + " spacing");
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

ComplexField fbp_invert_2d(const Sinogram& sino, const FieldGrid& out_grid) {
    if (out_grid.dim != 2) throw std::invalid_argument("fbp: output grid must be 2D");
    require_uniform(sino.angles, "angle");
    require_uniform(sino.offsets, "offset");

    std::size_t n_off = sino.offsets.size();
    double ds = sino.offsets[1] - sino.offsets[0];
    double dtheta = sino.angles[1] - sino.angles[0];
    std::size_t m = next_pow2(2 * n_off);

    // Ram-Lak ramp apodized by a Hann window, zero at Nyquist.
    std::vector<double> filter(m);
    double w_nyq = std::numbers::pi / ds;
    for (std::size_t i = 0; i < m; ++i) {
        long mi = (i < m / 2) ? long(i) : long(i) - long(m);
        double w = 2.0 * std::numbers::pi * double(mi) / (double(m) * ds);
        filter[i] = std::abs(w) * 0.5 * (1.0 + std::cos(std::numbers::pi * w / w_nyq));
    }

    std::vector<cdouble> buf(m);
    auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan fwd = fftw_plan_dft_1d(int(m), raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_1d(int(m), raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);

    // Filtered projections, one row per angle.
    std::vector<std::vector<double>> q(sino.angles.size(), std::vector<double>(n_off));
    for (std::size_t j = 0; j < sino.angles.size(); ++j) {
        std::fill(buf.begin(), buf.end(), cdouble{});
        for (std::size_t k = 0; k < n_off; ++k) buf[k] = sino.at(j, k);
        fftw_execute(fwd);
        for (std::size_t i = 0; i < m; ++i) buf[i] *= filter[i];
        fftw_execute(bwd);
        for (std::size_t k = 0; k < n_off; ++k) q[j][k] = buf[k].real() / double(m);
    }
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);

    // Backproject: f(x) = (dtheta / 2pi) * sum_j Q_j(x . n_j).
    ComplexField out(out_grid);
    for (std::size_t kk = 0; kk < out.values.size(); ++kk) {
        Point x = out_grid.node(kk);
        double acc = 0.0;
        for (std::size_t j = 0; j < sino.angles.size(); ++j) {
            double th = sino.angles[j];
            double s = -x[0] * std::sin(th) + x[1] * std::cos(th);
            double pos = (s - sino.offsets[0]) / ds;
            if (pos < 0.0 || pos > double(n_off - 1)) continue;
            std::size_t i0 = std::size_t(pos);
            if (i0 >= n_off - 1) i0 = n_off - 2;
            double frac = pos - double(i0);
            acc += (1.0 - frac) * q[j][i0] + frac * q[j][i0 + 1];
        }
        out.values[kk] = acc * dtheta / (2.0 * std::numbers::pi);
    }
    return out;
}

void write_sinogram_csv(const Sinogram& sino, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << "angle_index,theta,offset,value\n";
    char line[128];
    for (std::size_t j = 0; j < sino.angles.size(); ++j)
        for (std::size_t k = 0; k < sino.offsets.size(); ++k) {
            std::snprintf(line, sizeof line, "%zu,%.17g,%.17g,%.17g\n", j, sino.angles[j],
                          sino.offsets[k], sino.at(j, k));
            os << line;
        }
}

Sinogram read_sinogram_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string header;
    std::getline(is, header);
    Sinogram sino;
    std::string line;
    long last_idx = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::getline(ss, tok, ',');
        long idx = std::stol(tok);
        std::getline(ss, tok, ',');
        double theta = std::stod(tok);
        std::getline(ss, tok, ',');
        double offset = std::stod(tok);
        std::getline(ss, tok, ',');
        double value = std::stod(tok);
        if (idx != last_idx) {
            sino.angles.push_back(theta);
            last_idx = idx;
        }
        if (idx == 0) sino.offsets.push_back(offset);
        sino.values.push_back(value);
    }
    if (sino.values.size() != sino.angles.size() * sino.offsets.size())
        throw std::runtime_error("sinogram csv: ragged data");
    return sino;
}

}  // namespace nlslab
