#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gch/errors.hpp"
#include "gch/eta.hpp"
#include "gch/eulerian.hpp"
#include "gch/io.hpp"
#include "gch/solver.hpp"
#include "gch/verify.hpp"

namespace py = pybind11;
using namespace gch;

PYBIND11_MODULE(_gch, m) {
    m.doc() = "Characteristic-coordinate solvers for a family of nonlocal "
              "shallow-water equations";

    py::register_exception<Error>(m, "GchError", PyExc_RuntimeError);

    py::class_<NonlinearitySpec>(m, "NonlinearitySpec")
        .def_static("polynomial", &NonlinearitySpec::polynomial)
        .def_static("quadratic", &NonlinearitySpec::quadratic)
        .def_readonly("coeffs", &NonlinearitySpec::coeffs)
        .def("__call__", &NonlinearitySpec::operator())
        .def("lipschitz_bound", &NonlinearitySpec::lipschitz_bound);

    py::class_<GchParams>(m, "GchParams")
        .def(py::init<>())
        .def_readwrite("alpha", &GchParams::alpha)
        .def_readwrite("beta", &GchParams::beta)
        .def_readwrite("k", &GchParams::k)
        .def_readwrite("lam", &GchParams::lambda)
        .def_readwrite("h", &GchParams::h);

    m.def("make_preset", &make_preset, py::arg("name"),
          py::arg("args") = std::map<std::string, double>{});

    py::class_<InitialData>(m, "InitialData")
        .def(py::init<>())
        .def_readwrite("x", &InitialData::x)
        .def_readwrite("u0", &InitialData::u0)
        .def_readwrite("u0x", &InitialData::u0x)
        .def("validate", &InitialData::validate)
        .def("h1_norm", &InitialData::h1_norm);

    m.def("initial_zero", &initial_zero);
    m.def("initial_gaussian", &initial_gaussian, py::arg("amp"),
          py::arg("width"), py::arg("center"), py::arg("span"), py::arg("n"));
    m.def("initial_peakon", &initial_peakon, py::arg("c"), py::arg("center"),
          py::arg("span"), py::arg("n"));
    m.def("initial_steep", &initial_steep, py::arg("amp"), py::arg("span"),
          py::arg("n"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<int, double>(), py::arg("n") = 1024,
             py::arg("span") = 20.0)
        .def_readwrite("n", &GridSpec::n)
        .def_readwrite("span", &GridSpec::span);

    py::class_<LagrangianState>(m, "LagrangianState")
        .def_readonly("T", &LagrangianState::T)
        .def_readonly("y0", &LagrangianState::y0)
        .def_readonly("dY", &LagrangianState::dY)
        .def_readonly("u", &LagrangianState::u)
        .def_readonly("v", &LagrangianState::v)
        .def_readonly("xi", &LagrangianState::xi)
        .def_readonly("x", &LagrangianState::x);

    py::class_<EulerianField>(m, "EulerianField")
        .def_readonly("t", &EulerianField::t)
        .def_readonly("x", &EulerianField::x)
        .def_readonly("u", &EulerianField::u)
        .def_readonly("ux", &EulerianField::ux)
        .def_readonly("energy_density", &EulerianField::energy_density);

    py::class_<EnergyReport>(m, "EnergyReport")
        .def_readonly("T", &EnergyReport::T)
        .def_readonly("E", &EnergyReport::E)
        .def_readonly("E_bound", &EnergyReport::E_bound)
        .def_readonly("dE_dT_analytic", &EnergyReport::dE_dT_analytic)
        .def_readonly("sup_u", &EnergyReport::sup_u);

    py::class_<Snapshot>(m, "Snapshot")
        .def_readonly("state", &Snapshot::state)
        .def_readonly("report", &Snapshot::report);

    m.def("forward_transform", &forward_transform);
    m.def("reconstruct", &reconstruct, py::arg("state"), py::arg("lam"));
    m.def("eval_u_at", &eval_u_at);
    m.def("field_energy", &field_energy);
    m.def("suggest_dt", &suggest_dt);
    m.def(
        "integrate",
        [](const LagrangianState& s0, const GchParams& p, double t_end,
           double dt, const std::vector<double>& times) {
            return integrate(s0, p, t_end, dt, times);
        },
        py::arg("state"), py::arg("params"), py::arg("t_end"), py::arg("dt"),
        py::arg("snapshot_times") = std::vector<double>{});

    py::class_<EtaState>(m, "EtaState")
        .def_readonly("t", &EtaState::t)
        .def_readonly("eta", &EtaState::eta)
        .def_readonly("x", &EtaState::x)
        .def_readonly("u", &EtaState::u)
        .def_readonly("v", &EtaState::v);

    m.def("eta_from_initial", &eta_from_initial);
    m.def("integrate_eta", &integrate_eta, py::arg("state"), py::arg("params"),
          py::arg("t_end"), py::arg("dt"),
          py::arg("snapshot_times") = std::vector<double>{});
    m.def("reconstruct_eta", &reconstruct_eta, py::arg("state"), py::arg("lam"));

    py::class_<EulerianGrid>(m, "EulerianGrid")
        .def_readonly("x0", &EulerianGrid::x0)
        .def_readonly("dx", &EulerianGrid::dx)
        .def_readonly("t", &EulerianGrid::t)
        .def_readonly("u", &EulerianGrid::u);

    m.def("eulerian_from_initial", &eulerian_from_initial);
    m.def("integrate_eulerian", &integrate_eulerian, py::arg("grid"),
          py::arg("params"), py::arg("t_end"), py::arg("dt"),
          py::arg("snapshot_times") = std::vector<double>{});
    m.def("to_field", &to_field, py::arg("grid"), py::arg("lam"));
    m.def("helmholtz_invert", &helmholtz_invert);

    py::class_<TestFunction> tf(m, "TestFunction");
    py::enum_<TestFunction::Kind>(tf, "Kind")
        .value("SmoothBump", TestFunction::Kind::SmoothBump)
        .value("TentProduct", TestFunction::Kind::TentProduct);
    tf.def(py::init<>())
        .def_readwrite("kind", &TestFunction::kind)
        .def_readwrite("t0", &TestFunction::t0)
        .def_readwrite("x0", &TestFunction::x0)
        .def_readwrite("rt", &TestFunction::rt)
        .def_readwrite("rx", &TestFunction::rx)
        .def_readwrite("amp", &TestFunction::amp)
        .def("value", &TestFunction::value)
        .def("dt", &TestFunction::dt)
        .def("dx", &TestFunction::dx);

    py::class_<Trajectory>(m, "Trajectory")
        .def(py::init<>())
        .def_readwrite("params", &Trajectory::params)
        .def_readwrite("snaps", &Trajectory::snaps);

    m.def("weak_form_residual", &weak_form_residual);
    m.def("balance_law_residual", &balance_law_residual, py::arg("trajectory"),
          py::arg("phi"), py::arg("weighted") = true);
    m.def("default_battery", &default_battery, py::arg("t_end"),
          py::arg("x_half_width"));
    m.def("breaking_diagnostics", [](const Trajectory& traj) {
        BreakingReport rep = breaking_diagnostics(traj);
        py::list rows;
        for (const auto& r : rep.rows)
            rows.append(py::make_tuple(r.T, r.breaking_measure, r.min_xY));
        return py::make_tuple(rows, rep.breaking_time_fraction);
    });
}
