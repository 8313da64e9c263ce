#include "nlslab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nlslab {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

FieldGrid make_grid(int dim, const std::vector<std::pair<double, double>>& extents,
                    const std::vector<std::size_t>& counts) {
    if (dim < 1 || dim > 3) throw std::invalid_argument("make_grid: dim must be 1, 2 or 3");
    if (extents.size() != std::size_t(dim) || counts.size() != std::size_t(dim))
        throw std::invalid_argument("make_grid: extents/counts size must equal dim");
    FieldGrid g;
    g.dim = dim;
    for (int d = 0; d < dim; ++d) {
        auto [lo, hi] = extents[d];
        std::size_t n = counts[d];
        if (!(hi > lo)) throw std::invalid_argument("make_grid: degenerate extent on axis " +
                                                    std::to_string(d));
        if (n < 8 || !is_power_of_two(n))
            throw std::invalid_argument("make_grid: count must be a power of two >= 8 on axis " +
                                        std::to_string(d));
        g.axis[d] = Axis{n, lo, (hi - lo) / double(n)};
    }
    return g;
}

double wavenumber(const FieldGrid& grid, int d, std::size_t i) {
    std::size_t n = grid.axis[d].n;
    double L = grid.extent(d);
    long m = (i < n / 2) ? long(i) : long(i) - long(n);
    return 2.0 * std::numbers::pi * double(m) / L;
}

}  // namespace nlslab
