#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlslab/ansatz.hpp"
#include "nlslab/config.hpp"
#include "nlslab/recovery.hpp"
#include "nlslab/solver.hpp"
#include "nlslab/sweep.hpp"
#include "nlslab/xray.hpp"

namespace py = pybind11;
using namespace nlslab;

namespace {

py::array field_to_numpy(const ComplexField& f) {
    std::vector<py::ssize_t> shape;
    for (int d = 0; d < f.grid.dim; ++d) shape.push_back(py::ssize_t(f.grid.axis[d].n));
    py::array_t<std::complex<double>> arr(shape);
    std::copy(f.values.begin(), f.values.end(), arr.mutable_data());
    return arr;
}

}  // namespace

PYBIND11_MODULE(_nlslab, m) {
    m.doc() = "alpha-NLS wave-packet laboratory";

    py::class_<FieldGrid>(m, "FieldGrid")
        .def_readonly("dim", &FieldGrid::dim)
        .def("size", &FieldGrid::size)
        .def("counts",
             [](const FieldGrid& g) {
                 std::vector<std::size_t> n;
                 for (int d = 0; d < g.dim; ++d) n.push_back(g.axis[d].n);
                 return n;
             })
        .def("spacing", [](const FieldGrid& g) {
            std::vector<double> dx;
            for (int d = 0; d < g.dim; ++d) dx.push_back(g.axis[d].dx);
            return dx;
        });
    m.def("make_grid", &make_grid, py::arg("dim"), py::arg("extents"), py::arg("counts"));

    py::class_<Profile>(m, "Profile")
        .def("__call__", &Profile::eval)
        .def("laplacian", &Profile::laplacian_fd)
        .def_readonly("amplitude", &Profile::amplitude);
    m.def("bump", &make_bump, py::arg("dim"), py::arg("center"), py::arg("radius"),
          py::arg("amplitude"));
    m.def("plateau", &make_plateau, py::arg("dim"), py::arg("center"), py::arg("inner_radius"),
          py::arg("outer_radius"), py::arg("amplitude"));

    m.def("xray_transform", &xray_transform, py::arg("alpha"), py::arg("x0"), py::arg("xi"));
    m.def("pray_transform", &pray_transform, py::arg("alpha"), py::arg("x0"), py::arg("xi"));
    m.def("recover_alpha_1d", &recover_alpha_1d, py::arg("xalpha_samples"), py::arg("dx"));

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def_readwrite("dim", &ExperimentConfig::dim)
        .def_readwrite("h", &ExperimentConfig::h)
        .def_readwrite("T", &ExperimentConfig::T)
        .def_readwrite("T0", &ExperimentConfig::T0)
        .def_readwrite("R", &ExperimentConfig::R)
        .def_readwrite("K", &ExperimentConfig::K)
        .def_readwrite("xi", &ExperimentConfig::xi)
        .def_readwrite("alpha", &ExperimentConfig::alpha)
        .def_readwrite("psi", &ExperimentConfig::psi)
        .def_readwrite("dt_divisor", &ExperimentConfig::dt_divisor)
        .def_readwrite("dx_factor", &ExperimentConfig::dx_factor)
        .def_readwrite("measure_start", &ExperimentConfig::measure_start)
        .def_readwrite("measure_stop", &ExperimentConfig::measure_stop)
        .def_readwrite("measure_spacing", &ExperimentConfig::measure_spacing);
    m.def("canonical_config_1d", &canonical_config_1d);
    m.def("parse_config_file", &parse_config_file);
    m.def("emit_config", &emit_config);
    m.def("validate_config", &validate_config);

    m.def("evolve", [](const ExperimentConfig& cfg) {
        EvolveResult res = evolve(cfg);
        return py::make_tuple(field_to_numpy(res.u_final), res.mass_drift, res.energy_drift);
    });
    m.def("assemble_v", [](const ExperimentConfig& cfg, double t) {
        return field_to_numpy(assemble_v(cfg, t, build_grid(cfg)));
    });

    py::class_<RecoveryResult>(m, "RecoveryResult")
        .def_readonly("theta", &RecoveryResult::theta)
        .def_readonly("g", &RecoveryResult::g)
        .def_readonly("xalpha", &RecoveryResult::xalpha)
        .def_readonly("xalpha_true", &RecoveryResult::xalpha_true)
        .def_readonly("sup_error", &RecoveryResult::sup_error);
    m.def("recover_xalpha", &recover_xalpha);
    m.def("synthetic_xalpha", &synthetic_xalpha);
    m.def("reconstruct_alpha_1d", [](const ExperimentConfig& cfg, const RecoveryResult& res) {
        Reconstruction1D rec = reconstruct_alpha_1d(cfg, res);
        return py::make_tuple(rec.x, rec.alpha, rec.alpha_true, rec.sup_error);
    });
}
