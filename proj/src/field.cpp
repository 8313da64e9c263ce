#include "nlslab/field.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace nlslab {

bool ComplexField::finite() const {
    for (const auto& z : values)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double sup_norm_diff(const ComplexField& a, const ComplexField& b) {
    if (a.grid != b.grid) throw std::invalid_argument("sup_norm_diff: grid mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.values.size(); ++k)
        m = std::max(m, std::abs(a.values[k] - b.values[k]));
    return m;
}

double sup_norm(const ComplexField& f) {
    double m = 0.0;
    for (const auto& z : f.values) m = std::max(m, std::abs(z));
    return m;
}

namespace {

// The on-disk format is little-endian; raw writes rely on the host matching.
static_assert(std::endian::native == std::endian::little);

constexpr char kMagic[4] = {'N', 'L', 'S', 'F'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("NLSF: truncated file (size mismatch)");
    return v;
}

}  // namespace

void dump_field(const ComplexField& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("NLSF: cannot open for writing: " + path);
    os.write(kMagic, 4);
    put<std::uint32_t>(os, kVersion);
    put<std::uint32_t>(os, std::uint32_t(f.grid.dim));
    for (int d = 0; d < f.grid.dim; ++d) {
        put<std::uint64_t>(os, f.grid.axis[d].n);
        put<double>(os, f.grid.axis[d].x_min);
        put<double>(os, f.grid.axis[d].dx);
    }
    for (const auto& z : f.values) {
        put<double>(os, z.real());
        put<double>(os, z.imag());
    }
    if (!os) throw std::runtime_error("NLSF: write failure: " + path);
}

ComplexField load_field(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("NLSF: cannot open: " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("NLSF: bad magic bytes in " + path);
    auto version = get<std::uint32_t>(is);
    if (version != kVersion) throw std::runtime_error("NLSF: unsupported version");
    auto dim = get<std::uint32_t>(is);
    if (dim < 1 || dim > 3) throw std::runtime_error("NLSF: bad dim");
    FieldGrid g;
    g.dim = int(dim);
    for (int d = 0; d < g.dim; ++d) {
        g.axis[d].n = get<std::uint64_t>(is);
        g.axis[d].x_min = get<double>(is);
        g.axis[d].dx = get<double>(is);
        if (g.axis[d].n == 0 || g.axis[d].dx <= 0) throw std::runtime_error("NLSF: bad axis");
    }
    ComplexField f(g);
    for (auto& z : f.values) {
        double re = get<double>(is);
        double im = get<double>(is);
        z = {re, im};
    }
    // Any trailing bytes mean the header and payload disagree.
    is.peek();
    if (!is.eof()) throw std::runtime_error("NLSF: size mismatch (trailing data) in " + path);
    return f;
}

}  // namespace nlslab
