#ifndef NLSLAB_FIELD_HPP
#define NLSLAB_FIELD_HPP

#include <complex>
#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

using cdouble = std::complex<double>;

/// Complex samples on a FieldGrid, row-major with the last axis fastest.
struct ComplexField {
    FieldGrid grid;
    std::vector<cdouble> values;

    ComplexField() = default;
    explicit ComplexField(const FieldGrid& g) : grid(g), values(g.size(), cdouble{}) {}

    cdouble& operator[](std::size_t k) { return values[k]; }
    const cdouble& operator[](std::size_t k) const { return values[k]; }

    /// True when every sample is finite.
    bool finite() const;
};

/// max_k |a_k - b_k|; throws std::invalid_argument on grid mismatch.
double sup_norm_diff(const ComplexField& a, const ComplexField& b);

/// max_k |f_k|.
double sup_norm(const ComplexField& f);

/// NLSF binary format, bit-exact round trip:
///   magic "NLSF", version u32=1, dim u32,
///   per axis: n (u64), x_min (f64), dx (f64),
///   then prod(n_i) samples as interleaved little-endian f64 (re, im).
void dump_field(const ComplexField& f, const std::string& path);
ComplexField load_field(const std::string& path);

}  // namespace nlslab

#endif
