#ifndef NLSLAB_GRID_HPP
#define NLSLAB_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace nlslab {

/// A point in R^d, d <= 3; unused components stay zero.
using Point = std::array<double, 3>;

struct Axis {
    std::size_t n = 0;   // sample count, power of two, >= 8
    double x_min = 0.0;  // left edge
    double dx = 0.0;     // spacing, (x_max - x_min) / n
};

/// Uniform periodic rectangular grid in d in {1,2,3}.
/// Index n_i wraps to index 0 on each axis.
struct FieldGrid {
    int dim = 0;
    std::array<Axis, 3> axis{};

    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dim; ++d) s *= axis[d].n;
        return s;
    }
    double cell_volume() const {
        double v = 1.0;
        for (int d = 0; d < dim; ++d) v *= axis[d].dx;
        return v;
    }
    double extent(int d) const { return double(axis[d].n) * axis[d].dx; }
    double coord(int d, std::size_t i) const { return axis[d].x_min + double(i) * axis[d].dx; }

    /// Row-major flat index, last axis fastest.
    std::size_t index(const std::array<std::size_t, 3>& idx) const {
        std::size_t k = 0;
        for (int d = 0; d < dim; ++d) k = k * axis[d].n + idx[d];
        return k;
    }
    /// Inverse of index().
    std::array<std::size_t, 3> unravel(std::size_t k) const {
        std::array<std::size_t, 3> idx{};
        for (int d = dim - 1; d >= 0; --d) {
            idx[d] = k % axis[d].n;
            k /= axis[d].n;
        }
        return idx;
    }
    Point node(std::size_t k) const {
        auto idx = unravel(k);
        Point x{};
        for (int d = 0; d < dim; ++d) x[d] = coord(d, idx[d]);
        return x;
    }

    bool operator==(const FieldGrid& o) const {
        if (dim != o.dim) return false;
        for (int d = 0; d < dim; ++d)
            if (axis[d].n != o.axis[d].n || axis[d].x_min != o.axis[d].x_min ||
                axis[d].dx != o.axis[d].dx)
                return false;
        return true;
    }
    bool operator!=(const FieldGrid& o) const { return !(*this == o); }
};

/// Build a grid from per-axis extents and power-of-two counts.
/// Throws std::invalid_argument on bad dim, degenerate extents or
/// non-power-of-two counts.
FieldGrid make_grid(int dim, const std::vector<std::pair<double, double>>& extents,
                    const std::vector<std::size_t>& counts);

bool is_power_of_two(std::size_t n);

/// Periodic wavenumber of mode index i on axis d: 2*pi*m/L with
/// m in [-n/2, n/2); the Nyquist mode is taken as -n/2.
double wavenumber(const FieldGrid& grid, int d, std::size_t i);

}  // namespace nlslab

#endif
