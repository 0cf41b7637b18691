#include "hgs/GeneticAlgorithm.hpp"
#include "hgs/Model.hpp"
#include "hgs/SolverParams.hpp"
#include "hgs/StoppingCriterion.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hgs;

namespace
{
// Solve outcome with routes given as model handles.
struct PyResult
{
    Result result;
    std::vector<std::vector<Model::Handle>> routes;
};

PyResult solve(Model const &model, StoppingCriterion const &stop, std::uint64_t seed, std::optional<std::string> const &profile)
{
    Result result = [&] {
        py::gil_scoped_release release;
        return profile ? model.solve(stop, seed, SolverParams::profile(*profile)) : model.solve(stop, seed);
    }();

    std::vector<Model::Handle> handleOf(model.locations().size());
    for (auto handle : model.locations())
        handleOf[model.indexOf(handle)] = handle;

    PyResult out{std::move(result), {}};
    for (auto const &route : out.result.best.routes())
    {
        auto &handles = out.routes.emplace_back();
        for (auto client : route.visits())
            handles.push_back(handleOf[client]);
    }

    return out;
}
}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Hybrid genetic search for capacitated vehicle routing, with or without time windows.";

    py::class_<StoppingCriterion>(m, "StoppingCriterion")
        .def("describe", &StoppingCriterion::describe)
        .def("__repr__", [](StoppingCriterion const &stop) { return "<StoppingCriterion " + stop.describe() + ">"; });

    m.def("MaxIterations", &StoppingCriterion::maxIterations, py::arg("count"));
    m.def("MaxRuntime", &StoppingCriterion::maxRuntime, py::arg("seconds"));
    m.def("NoImprovement", &StoppingCriterion::noImprovement, py::arg("count"));

    py::class_<PyResult>(m, "Result")
        .def_property_readonly("cost", [](PyResult const &r) { return r.result.cost(); })
        .def_property_readonly("iterations", [](PyResult const &r) { return r.result.iterations; })
        .def_property_readonly("runtime", [](PyResult const &r) { return r.result.runtime; })
        .def_property_readonly("num_routes", [](PyResult const &r) { return r.result.best.numRoutes(); })
        .def_readonly("routes", &PyResult::routes, "Client handles of each route, in visiting order.")
        .def("is_feasible", [](PyResult const &r) { return r.result.isFeasible(); })
        .def("__repr__", [](PyResult const &r) {
            return "<Result cost=" + std::to_string(r.result.cost())
                   + (r.result.isFeasible() ? "" : " infeasible") + ">";
        });

    py::register_exception<std::invalid_argument>(m, "InvalidModelError", PyExc_ValueError);

    py::class_<Model>(m, "Model")
        .def(py::init<Distance>(), py::arg("missing_edge") = Model::defaultMissingEdge)
        .def("add_depot",
             &Model::addDepot,
             py::arg("x"),
             py::arg("y"),
             py::arg("tw_early") = 0,
             py::arg("tw_late") = unboundedTime)
        .def("add_client",
             &Model::addClient,
             py::arg("x"),
             py::arg("y"),
             py::arg("demand") = 0,
             py::arg("service_duration") = 0,
             py::arg("tw_early") = 0,
             py::arg("tw_late") = unboundedTime)
        .def("add_vehicle_type", &Model::addVehicleType, py::arg("num_available"), py::arg("capacity"))
        .def("add_edge",
             &Model::addEdge,
             py::arg("frm"),
             py::arg("to"),
             py::arg("distance"),
             py::arg("duration") = std::nullopt)
        .def_property_readonly("locations", &Model::locations)
        .def("solve", &solve, py::arg("stop"), py::arg("seed") = 1, py::arg("profile") = std::nullopt);
}
