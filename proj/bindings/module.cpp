#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptlattice/dynamics.hpp"
#include "ptlattice/errors.hpp"
#include "ptlattice/io.hpp"
#include "ptlattice/phase.hpp"
#include "ptlattice/spectrum.hpp"

namespace py = pybind11;
using namespace ptlattice;

PYBIND11_MODULE(_ptlattice, m) {
    m.doc() = "PT-symmetric non-uniform lattice toolkit";

    py::register_exception<BracketFailure>(m, "BracketFailure");
    py::register_exception<NonMonotone>(m, "NonMonotone");
    py::register_exception<GrowthOverflow>(m, "GrowthOverflow");
    py::register_exception<StepNotConverged>(m, "StepNotConverged");
    py::register_exception<InsufficientData>(m, "InsufficientData");
    py::register_exception<DegenerateFit>(m, "DegenerateFit");

    py::class_<LatticeSpec>(m, "LatticeSpec")
        .def(py::init([](int n_sites, double alpha, double t0, int m0, double gamma) {
                 LatticeSpec spec{n_sites, alpha, t0, m0, gamma};
                 spec.validate();
                 return spec;
             }),
             py::arg("n_sites"), py::arg("alpha"), py::arg("t0"), py::arg("m0"),
             py::arg("gamma"))
        .def_readonly("n_sites", &LatticeSpec::n_sites)
        .def_readonly("alpha", &LatticeSpec::alpha)
        .def_readonly("t0", &LatticeSpec::t0)
        .def_readonly("m0", &LatticeSpec::m0)
        .def_readonly("gamma", &LatticeSpec::gamma)
        .def_property_readonly("mirror", &LatticeSpec::mirror)
        .def_property_readonly("mu", &LatticeSpec::mu)
        .def_property_readonly("impurity_distance", &LatticeSpec::impurity_distance);

    py::class_<Bandwidth>(m, "Bandwidth")
        .def_readonly("delta_full", &Bandwidth::delta_full)
        .def_readonly("delta", &Bandwidth::delta)
        .def_readonly("t_alpha_unit", &Bandwidth::t_alpha_unit);

    py::class_<SpectrumReport>(m, "SpectrumReport")
        .def_readonly("eigenvalues", &SpectrumReport::eigenvalues)
        .def_readonly("tol_imag", &SpectrumReport::tol_imag)
        .def_readonly("n_complex", &SpectrumReport::n_complex)
        .def_readonly("n_real", &SpectrumReport::n_real)
        .def_readonly("degree_of_breaking", &SpectrumReport::degree_of_breaking)
        .def_readonly("is_broken", &SpectrumReport::is_broken);

    py::class_<PhasePoint>(m, "PhasePoint")
        .def_readonly("mu", &PhasePoint::mu)
        .def_readonly("m0", &PhasePoint::m0)
        .def_readonly("gamma_pt", &PhasePoint::gamma_pt)
        .def_readonly("gamma_pt_scaled", &PhasePoint::gamma_pt_scaled)
        .def_readonly("bracket_width", &PhasePoint::bracket_width);

    py::class_<PhaseCurve>(m, "PhaseCurve")
        .def_readonly("n_sites", &PhaseCurve::n_sites)
        .def_readonly("alpha", &PhaseCurve::alpha)
        .def_readonly("points", &PhaseCurve::points)
        .def_readonly("failures", &PhaseCurve::failures);

    py::enum_<MuMode>(m, "MuMode")
        .value("FARTHEST", MuMode::Farthest)
        .value("FIXED_MU", MuMode::FixedMu)
        .value("CLOSEST", MuMode::Closest);

    py::class_<ScalingPoint>(m, "ScalingPoint")
        .def_readonly("n_sites", &ScalingPoint::n_sites)
        .def_readonly("gamma_pt_scaled", &ScalingPoint::gamma_pt_scaled);

    py::class_<ScalingFit>(m, "ScalingFit")
        .def_readonly("mu_mode", &ScalingFit::mu_mode)
        .def_readonly("exponent", &ScalingFit::exponent)
        .def_readonly("asymptote", &ScalingFit::asymptote)
        .def_readonly("residual", &ScalingFit::residual)
        .def_readonly("points", &ScalingFit::points);

    py::class_<StaircasePoint>(m, "StaircasePoint")
        .def_readonly("gamma_over_delta", &StaircasePoint::gamma_over_delta)
        .def_readonly("n_complex", &StaircasePoint::n_complex);

    py::class_<Staircase>(m, "Staircase")
        .def_readonly("points", &Staircase::points)
        .def_readonly("max_count", &Staircase::max_count);

    py::class_<GainRamp>(m, "GainRamp")
        .def(py::init([](double gamma_l, double tau) { return GainRamp{gamma_l, tau}; }),
             py::arg("gamma_l"), py::arg("tau"))
        .def_readonly("gamma_l", &GainRamp::gamma_l)
        .def_readonly("tau", &GainRamp::tau)
        .def("effective_gain", &GainRamp::effective_gain, py::arg("t"));

    py::class_<IntensityTrace>(m, "IntensityTrace")
        .def_readonly("times", &IntensityTrace::times)
        .def_readonly("grid", &IntensityTrace::grid)
        .def_readonly("total", &IntensityTrace::total)
        .def_readonly("t_alpha_unit", &IntensityTrace::t_alpha_unit);

    m.def("hopping_profile", &hopping_profile, py::arg("n_sites"), py::arg("alpha"),
          py::arg("t0"));
    m.def("mirror_site", &mirror_site, py::arg("m0"), py::arg("n_sites"));
    m.def("closest_m0", &closest_m0, py::arg("n_sites"));
    m.def("m0_from_mu", &m0_from_mu, py::arg("mu"), py::arg("n_sites"));
    m.def("build_hamiltonian",
          py::overload_cast<const LatticeSpec&, double, double>(&build_hamiltonian),
          py::arg("spec"), py::arg("gain"), py::arg("loss"));
    m.def("build_hamiltonian", py::overload_cast<const LatticeSpec&>(&build_hamiltonian),
          py::arg("spec"));
    m.def("clean_bandwidth", &clean_bandwidth, py::arg("n_sites"), py::arg("alpha"),
          py::arg("t0"));

    m.def("spectrum", &spectrum, py::arg("h"));
    m.def("classify", &classify, py::arg("eigenvalues"), py::arg("bandwidth"),
          py::arg("rel_tol") = kDefaultClassifyRelTol);
    m.def("check_spectral_symmetry", &check_spectral_symmetry, py::arg("eigenvalues"),
          py::arg("abs_tol"));
    m.def("complex_eigenvalue_locations", &complex_eigenvalue_locations,
          py::arg("report"), py::arg("bandwidth"));

    m.def("is_pt_symmetric", &is_pt_symmetric, py::arg("spec"),
          py::arg("rel_tol") = kDefaultClassifyRelTol);
    m.def("critical_gamma", &critical_gamma, py::arg("n_sites"), py::arg("m0"),
          py::arg("alpha"), py::arg("t0") = 1.0, py::arg("tol_gamma") = 0.0,
          py::call_guard<py::gil_scoped_release>());
    m.def("phase_diagram", &phase_diagram, py::arg("n_sites"), py::arg("alpha"),
          py::arg("m0_values"), py::arg("t0") = 1.0, py::arg("tol_gamma") = 0.0,
          py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
    m.def("scaling_fit", &scaling_fit, py::arg("n_values"), py::arg("alpha"),
          py::arg("mode"), py::arg("mu") = 0.0, py::arg("t0") = 1.0,
          py::arg("tol_gamma") = 0.0, py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("breaking_staircase", &breaking_staircase, py::arg("n_sites"), py::arg("m0"),
          py::arg("alpha"), py::arg("t0"), py::arg("gamma_grid"),
          py::call_guard<py::gil_scoped_release>());
    m.def("staircase_grid", &staircase_grid, py::arg("n_sites"), py::arg("m0"),
          py::arg("alpha"), py::arg("t0"), py::arg("gamma_max"),
          py::arg("base_points") = 400, py::call_guard<py::gil_scoped_release>());

    m.def("localized_state", &localized_state, py::arg("site"), py::arg("n_sites"));
    m.def("propagator", &propagator, py::arg("h"), py::arg("t"));
    m.def("evolve_static", &evolve_static, py::arg("spec"), py::arg("psi0"),
          py::arg("times"), py::call_guard<py::gil_scoped_release>());
    m.def("evolve_ramp", &evolve_ramp, py::arg("spec"), py::arg("ramp"), py::arg("psi0"),
          py::arg("times"), py::arg("step") = 0.0,
          py::call_guard<py::gil_scoped_release>());
}
