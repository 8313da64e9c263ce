#include "nlslab/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace nlslab {

namespace {

// Plans are cached by (shape, sign) and executed on caller arrays via the
// new-array interface. FFTW planning is not thread-safe; execution is.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(const FieldGrid& grid, int sign) {
        std::array<int, 4> key{grid.dim, 0, 0, 0};
        for (int d = 0; d < grid.dim; ++d) key[d + 1] = int(grid.axis[d].n);
        std::lock_guard<std::mutex> lock(mu_);
        auto it = plans_.find({key, sign});
        if (it != plans_.end()) return it->second;
        std::vector<int> n(key.begin() + 1, key.begin() + 1 + grid.dim);
        std::vector<fftw_complex> buf(grid.size());
        fftw_plan p = fftw_plan_dft(grid.dim, n.data(), buf.data(), buf.data(), sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw planning failed");
        plans_[{key, sign}] = p;
        return p;
    }

private:
    std::mutex mu_;
    std::map<std::pair<std::array<int, 4>, int>, fftw_plan> plans_;
};

void execute(const FieldGrid& grid, std::vector<cdouble>& data, int sign) {
    if (data.size() != grid.size()) throw std::invalid_argument("fft: size mismatch");
    fftw_plan p = PlanCache::instance().get(grid, sign);
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(p, raw, raw);
}

double k_squared(const FieldGrid& grid, const std::array<std::size_t, 3>& idx) {
    double k2 = 0.0;
    for (int d = 0; d < grid.dim; ++d) {
        double k = wavenumber(grid, d, idx[d]);
        k2 += k * k;
    }
    return k2;
}

}  // namespace

void fft_forward(const FieldGrid& grid, std::vector<cdouble>& data) {
    execute(grid, data, FFTW_FORWARD);
}

void fft_inverse(const FieldGrid& grid, std::vector<cdouble>& data) {
    execute(grid, data, FFTW_BACKWARD);
    double inv = 1.0 / double(grid.size());
    for (auto& z : data) z *= inv;
}

ComplexField laplacian(const ComplexField& f) {
    ComplexField out = f;
    fft_forward(out.grid, out.values);
    for (std::size_t k = 0; k < out.values.size(); ++k)
        out.values[k] *= -k_squared(out.grid, out.grid.unravel(k));
    fft_inverse(out.grid, out.values);
    return out;
}

ComplexField gradient(const ComplexField& f, int d) {
    ComplexField out = f;
    fft_forward(out.grid, out.values);
    for (std::size_t k = 0; k < out.values.size(); ++k) {
        double kd = wavenumber(out.grid, d, out.grid.unravel(k)[d]);
        out.values[k] *= cdouble(0.0, kd);
    }
    fft_inverse(out.grid, out.values);
    return out;
}

void linear_propagate(ComplexField& f, double dt) {
    fft_forward(f.grid, f.values);
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        double k2 = k_squared(f.grid, f.grid.unravel(k));
        f.values[k] *= std::polar(1.0, -dt * k2);
    }
    fft_inverse(f.grid, f.values);
}

namespace {

// Evaluate the trigonometric interpolant from a precomputed spectrum.
cdouble interp_from_spectrum(const FieldGrid& grid, const std::vector<cdouble>& spec,
                             const Point& x) {
    // Per-axis phase tables e^{i k_m (x_d - x_min_d)}, indexed like the DFT.
    std::array<std::vector<cdouble>, 3> phase;
    for (int d = 0; d < grid.dim; ++d) {
        std::size_t n = grid.axis[d].n;
        phase[d].resize(n);
        double off = x[d] - grid.axis[d].x_min;
        for (std::size_t i = 0; i < n; ++i)
            phase[d][i] = std::polar(1.0, wavenumber(grid, d, i) * off);
    }
    cdouble acc = 0.0;
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < spec.size(); ++k) {
        idx = grid.unravel(k);
        cdouble p = phase[0][idx[0]];
        for (int d = 1; d < grid.dim; ++d) p *= phase[d][idx[d]];
        acc += spec[k] * p;
    }
    return acc / double(grid.size());
}

}  // namespace

cdouble fourier_interp(const ComplexField& f, const Point& x) {
    std::vector<cdouble> spec = f.values;
    fft_forward(f.grid, spec);
    return interp_from_spectrum(f.grid, spec, x);
}

std::vector<cdouble> fourier_interp(const ComplexField& f, const std::vector<Point>& xs) {
    std::vector<cdouble> spec = f.values;
    fft_forward(f.grid, spec);
    std::vector<cdouble> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(interp_from_spectrum(f.grid, spec, x));
    return out;
}

}  // namespace nlslab
