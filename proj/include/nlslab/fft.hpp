#ifndef NLSLAB_FFT_HPP
#define NLSLAB_FFT_HPP

#include "nlslab/field.hpp"

namespace nlslab {

/// Unnormalized forward DFT of the sample array (in place).
void fft_forward(const FieldGrid& grid, std::vector<cdouble>& data);

/// Inverse DFT including the 1/N normalization (in place).
void fft_inverse(const FieldGrid& grid, std::vector<cdouble>& data);

/// Spectral Laplacian: multiply mode k by -|k|^2.
ComplexField laplacian(const ComplexField& f);

/// Spectral gradient component along axis d: multiply mode k by i*k_d.
ComplexField gradient(const ComplexField& f, int d);

/// Multiply each spectral mode by exp(-i*dt*|k|^2) (free Schrodinger
/// propagator over dt), in physical space in and out.
void linear_propagate(ComplexField& f, double dt);

/// Trigonometric (spectral) interpolation of f at an off-grid point.
/// Exact at grid nodes.
cdouble fourier_interp(const ComplexField& f, const Point& x);

/// As above for many points sharing one forward transform.
std::vector<cdouble> fourier_interp(const ComplexField& f, const std::vector<Point>& xs);

}  // namespace nlslab

#endif
