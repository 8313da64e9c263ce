#ifndef NLSLAB_SRC_GAUSS_HPP
#define NLSLAB_SRC_GAUSS_HPP

#include <array>
#include <cstddef>

namespace nlslab::detail {

// 8-node Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 8> kGL8Nodes = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
    0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
inline constexpr std::array<double, 8> kGL8Weights = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
    0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

/// Composite Gauss-Legendre quadrature of f over [a, b].
template <class F>
double gauss_composite(F&& f, double a, double b, std::size_t panels) {
    if (!(b > a)) return 0.0;
    double hp = (b - a) / double(panels);
    double acc = 0.0;
    for (std::size_t p = 0; p < panels; ++p) {
        double mid = a + (double(p) + 0.5) * hp;
        double half = 0.5 * hp;
        double local = 0.0;
        for (std::size_t q = 0; q < kGL8Nodes.size(); ++q)
            local += kGL8Weights[q] * f(mid + half * kGL8Nodes[q]);
        acc += local * half;
    }
    return acc;
}

}  // namespace nlslab::detail

#endif
