// _core.cpp — pybind11 module exposing the main library operations.

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hybridom/features.hpp"
#include "hybridom/io.hpp"
#include "hybridom/oracle.hpp"
#include "hybridom/presets.hpp"
#include "hybridom/response.hpp"
#include "hybridom/steady_state.hpp"

namespace py = pybind11;
using namespace hybridom;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Optical response of a double-cavity optomechanical system with an "
              "embedded qubit: steady states, frequency-domain output fields, "
              "CPT/CPS/OMIA features, and a time-domain cross-check.";

    py::register_exception<NonConvergence>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<SingularDenominator>(m, "SingularDenominatorError",
                                                PyExc_RuntimeError);
    py::register_exception<UndefinedNormalization>(m, "UndefinedNormalizationError",
                                                   PyExc_RuntimeError);
    py::register_exception<NotSettled>(m, "NotSettledError", PyExc_RuntimeError);
    py::register_exception<StepTooLarge>(m, "StepTooLargeError", PyExc_RuntimeError);

    py::enum_<CouplingKind>(m, "CouplingKind")
        .value("none", CouplingKind::none)
        .value("linear", CouplingKind::linear)
        .value("nonlinear", CouplingKind::nonlinear);

    py::class_<QubitCoupling>(m, "QubitCoupling")
        .def(py::init<>())
        .def_static("none", &QubitCoupling::none)
        .def_static("linear", &QubitCoupling::linear, py::arg("g"))
        .def_static("nonlinear", &QubitCoupling::nonlinear, py::arg("g_N"))
        .def_readwrite("kind", &QubitCoupling::kind)
        .def_readwrite("value", &QubitCoupling::value)
        .def("canonical", &QubitCoupling::canonical)
        .def(py::self == py::self)
        .def("__repr__", [](const QubitCoupling& c) {
            switch (c.kind) {
                case CouplingKind::linear:
                    return "QubitCoupling.linear(g=" + std::to_string(c.value) + ")";
                case CouplingKind::nonlinear:
                    return "QubitCoupling.nonlinear(g_N=" + std::to_string(c.value) + ")";
                default:
                    return std::string("QubitCoupling.none()");
            }
        });

    py::class_<SystemParams>(m, "SystemParams")
        .def(py::init<>())
        .def_readwrite("kappa", &SystemParams::kappa)
        .def_readwrite("gamma_m", &SystemParams::gamma_m)
        .def_readwrite("k_d", &SystemParams::k_d)
        .def_readwrite("omega_m", &SystemParams::omega_m)
        .def_readwrite("omega_q", &SystemParams::omega_q)
        .def_readwrite("delta_c", &SystemParams::delta_c)
        .def_readwrite("g0", &SystemParams::g0)
        .def_readwrite("coupling", &SystemParams::coupling)
        .def_readwrite("sigma_z", &SystemParams::sigma_z)
        .def_readwrite("eps_cL", &SystemParams::eps_cL)
        .def_readwrite("eps_cR", &SystemParams::eps_cR)
        .def(py::self == py::self);

    py::class_<DriveConfig>(m, "DriveConfig")
        .def(py::init<>())
        .def_readwrite("eps_L", &DriveConfig::eps_L)
        .def_readwrite("eps_R", &DriveConfig::eps_R)
        .def_readwrite("theta", &DriveConfig::theta)
        .def_readwrite("n", &DriveConfig::n)
        .def_readwrite("G", &DriveConfig::G)
        .def_readwrite("G_N", &DriveConfig::G_N)
        .def(py::self == py::self);

    py::class_<ValidationIssue>(m, "ValidationIssue")
        .def_readonly("field", &ValidationIssue::field)
        .def_readonly("message", &ValidationIssue::message);
    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("errors", &ValidationReport::errors)
        .def_readonly("warnings", &ValidationReport::warnings)
        .def("passed", &ValidationReport::pass);
    m.def("validate", &validate, py::arg("params"), py::arg("drive"));

    py::class_<SteadyState>(m, "SteadyState")
        .def_readonly("b_s", &SteadyState::b_s)
        .def_readonly("sigma_minus_s", &SteadyState::sigma_minus_s)
        .def_readonly("c1_s", &SteadyState::c1_s)
        .def_readonly("c2_s", &SteadyState::c2_s)
        .def_readonly("delta_1", &SteadyState::delta_1)
        .def_readonly("delta_2", &SteadyState::delta_2)
        .def_readonly("residual", &SteadyState::residual)
        .def_readonly("iterations", &SteadyState::iterations);
    py::class_<SteadySolveOptions>(m, "SteadySolveOptions")
        .def(py::init<>())
        .def_readwrite("tol", &SteadySolveOptions::tol)
        .def_readwrite("max_iter", &SteadySolveOptions::max_iter)
        .def_readwrite("damping", &SteadySolveOptions::damping)
        .def_readwrite("sideband_approx", &SteadySolveOptions::sideband_approx);
    m.def("solve_steady", &solve_steady, py::arg("params"),
          py::arg("options") = SteadySolveOptions{});
    m.def("steady_residual", &steady_residual, py::arg("params"), py::arg("state"),
          py::arg("sideband_approx") = false);
    m.def("drive_from_steady", &drive_from_steady, py::arg("params"), py::arg("probe"),
          py::arg("state"));

    py::class_<ResponseSample>(m, "ResponseSample")
        .def_readonly("x", &ResponseSample::x)
        .def_readonly("db_plus", &ResponseSample::db_plus)
        .def_readonly("dc1_plus", &ResponseSample::dc1_plus)
        .def_readonly("dc2_plus", &ResponseSample::dc2_plus)
        .def_readonly("eout_L_plus", &ResponseSample::eout_L_plus)
        .def_readonly("eout_R_plus", &ResponseSample::eout_R_plus)
        .def_readonly("eps_T", &ResponseSample::eps_T)
        .def_readonly("has_eps_T", &ResponseSample::has_eps_T)
        .def_readonly("norm_L", &ResponseSample::norm_L)
        .def_readonly("norm_R_by_L", &ResponseSample::norm_R_by_L)
        .def_readonly("norm_R_by_R", &ResponseSample::norm_R_by_R)
        .def_readonly("singular", &ResponseSample::singular);
    m.def("response_at", &response_at, py::arg("params"), py::arg("drive"), py::arg("x"));
    m.def("transmission_eT", &transmission_eT, py::arg("params"), py::arg("drive"),
          py::arg("x"));
    m.def("transmission_eT_reduced", &transmission_eT_reduced, py::arg("drive"),
          py::arg("x"), py::arg("kappa") = 1.0);
    m.def(
        "sweep",
        [](const SystemParams& p, const DriveConfig& d, const std::vector<double>& grid,
           bool parallel) { return sweep(p, d, grid, parallel); },
        py::arg("params"), py::arg("drive"), py::arg("grid"), py::arg("parallel") = true);
    m.def("linspace", &linspace, py::arg("xmin"), py::arg("xmax"), py::arg("points"));

    py::class_<FeatureTols>(m, "FeatureTols")
        .def(py::init<>())
        .def_readwrite("cpt_norm", &FeatureTols::cpt_norm)
        .def_readwrite("cpt_ratio", &FeatureTols::cpt_ratio)
        .def_readwrite("cps", &FeatureTols::cps)
        .def_readwrite("refine_dx", &FeatureTols::refine_dx)
        .def_readwrite("root_imag", &FeatureTols::root_imag);
    py::class_<CptRoots>(m, "CptRoots").def_readonly("roots", &CptRoots::roots);
    m.def("cpt_roots_closed_form", &cpt_roots_closed_form, py::arg("G"), py::arg("coupling"),
          py::arg("kappa") = 1.0);
    py::class_<CptPoint>(m, "CptPoint")
        .def_readonly("x", &CptPoint::x)
        .def_readonly("norm_L", &CptPoint::norm_L)
        .def_readonly("norm_R_by_L", &CptPoint::norm_R_by_L)
        .def_readonly("source", &CptPoint::source);
    py::class_<CpsPoint>(m, "CpsPoint")
        .def_readonly("x", &CpsPoint::x)
        .def_readonly("norm_L", &CpsPoint::norm_L)
        .def_readonly("norm_R_by_R", &CpsPoint::norm_R_by_R)
        .def_readonly("side", &CpsPoint::side);
    py::class_<OmiaPeak>(m, "OmiaPeak")
        .def_readonly("x", &OmiaPeak::x)
        .def_readonly("re_eT", &OmiaPeak::re_eT)
        .def_readonly("kind", &OmiaPeak::kind)
        .def_readonly("width", &OmiaPeak::width);
    py::class_<FeatureReport>(m, "FeatureReport")
        .def_readonly("cpt_points", &FeatureReport::cpt_points)
        .def_readonly("near_cpt_dips", &FeatureReport::near_cpt_dips)
        .def_readonly("cps_points", &FeatureReport::cps_points)
        .def_readonly("omia_peaks", &FeatureReport::omia_peaks)
        .def_property_readonly("classification",
                               [](const FeatureReport& r) { return to_string(r.classification); })
        .def_readonly("discarded_complex_roots", &FeatureReport::discarded_complex_roots)
        .def_readonly("warnings", &FeatureReport::warnings);
    m.def(
        "analyze_features",
        [](const SystemParams& p, const DriveConfig& d, const std::vector<double>& grid,
           const FeatureTols& tols) { return analyze_features(p, d, grid, tols); },
        py::arg("params"), py::arg("drive"), py::arg("grid"),
        py::arg("tols") = FeatureTols{});

    py::class_<OracleConfig>(m, "OracleConfig")
        .def(py::init<>())
        .def_readwrite("t_transient", &OracleConfig::t_transient)
        .def_readwrite("t_sample", &OracleConfig::t_sample)
        .def_readwrite("dt", &OracleConfig::dt)
        .def_readwrite("tol", &OracleConfig::tol);
    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("x", &OracleResult::x)
        .def_readonly("db_plus", &OracleResult::db_plus)
        .def_readonly("dc1_plus", &OracleResult::dc1_plus)
        .def_readonly("dc2_plus", &OracleResult::dc2_plus)
        .def_readonly("transient_time", &OracleResult::transient_time)
        .def_readonly("dt", &OracleResult::dt)
        .def_readonly("rel_error_estimate", &OracleResult::rel_error_estimate);
    m.def("integrate_response", &integrate_response, py::arg("params"), py::arg("drive"),
          py::arg("x"), py::arg("config") = OracleConfig{});

    py::class_<Curve>(m, "Curve")
        .def_readonly("label", &Curve::label)
        .def_readonly("system", &Curve::system)
        .def_readonly("drive", &Curve::drive);
    py::class_<Preset>(m, "Preset")
        .def_readonly("name", &Preset::name)
        .def_readonly("title", &Preset::title)
        .def_readonly("curves", &Preset::curves)
        .def_readonly("xmin", &Preset::xmin)
        .def_readonly("xmax", &Preset::xmax)
        .def_readonly("points", &Preset::points)
        .def_readonly("stated", &Preset::stated)
        .def_readonly("assumed", &Preset::assumed);
    m.def("presets", []() { return preset_registry(); });
    m.def("preset", [](const std::string& name) -> const Preset* {
        const auto sel = find_preset(name);
        if (!sel) throw py::key_error("unknown preset '" + name + "'");
        return sel->preset;
    }, py::return_value_policy::reference);
}
