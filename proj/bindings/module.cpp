#include <pybind11/pybind11.h>

#include "hagge/driver.hpp"
#include "hagge/error.hpp"

namespace py = pybind11;

namespace {

// The bindings speak the same JSON dialect as the command line; the Python
// wrapper decodes it. Keeping the boundary at strings means the exactness
// guarantee (no floating point outside the figure module) survives the trip.
struct PyResult {
    int exit_code;
    std::string json;
    std::string human;
};

PyResult wrap(const hagge::CommandResult& r) { return {r.exit_code, r.json, r.human}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact areal-coordinate verifier for the eight-circle orthocentre construction";

    py::register_exception<hagge::InputError>(m, "InputError", PyExc_ValueError);

    py::class_<PyResult>(m, "CommandResult")
        .def_readonly("exit_code", &PyResult::exit_code)
        .def_readonly("json", &PyResult::json)
        .def_readonly("human", &PyResult::human);

    m.def(
        "verify",
        [](const std::string& triangle, const std::string& point, bool sides, bool symbolic,
           bool generic_point, long long budget, bool allow_exterior) {
            hagge::VerifyArgs a;
            a.triangle = triangle;
            a.point = point;
            a.sides = sides;
            a.symbolic = symbolic;
            a.generic_point = generic_point;
            a.budget = budget;
            a.allow_exterior = allow_exterior;
            return wrap(hagge::cmd_verify(a));
        },
        py::arg("triangle") = "4,5,6", py::arg("point") = "1,1,1", py::arg("sides") = false,
        py::arg("symbolic") = false, py::arg("generic_point") = false,
        py::arg("budget") = 1000000LL, py::arg("allow_exterior") = false,
        "Run the checklist on one instance, exact rational or symbolic.");

    m.def(
        "fuzz",
        [](int count, std::uint64_t seed, long long max_coord) {
            hagge::FuzzArgs a;
            a.count = count;
            a.seed = seed;
            a.max_coord = max_coord;
            return wrap(hagge::cmd_fuzz(a));
        },
        py::arg("count") = 100, py::arg("seed") = 0, py::arg("max_coord") = 40,
        "Verify randomly sampled instances; deterministic for a fixed seed.");

    m.def(
        "special",
        [](const std::string& which, const std::string& triangle, bool sides) {
            hagge::SpecialArgs a;
            a.which = which;
            a.triangle = triangle;
            a.sides = sides;
            return wrap(hagge::cmd_special(a));
        },
        py::arg("which") = "h", py::arg("triangle") = "4,5,6", py::arg("sides") = false,
        "Run a degenerate starting point: h (orthocentre) or k (symmedian point).");

    m.def(
        "figure",
        [](const std::string& triangle, const std::string& point, const std::string& out, int size,
           bool labels, bool sides) {
            hagge::FigureArgs a;
            a.triangle = triangle;
            a.point = point;
            a.out = out;
            a.size = size;
            a.labels = labels;
            a.sides = sides;
            return wrap(hagge::cmd_figure(a));
        },
        py::arg("triangle") = "4,5,6", py::arg("point") = "1,1,1", py::arg("out") = "fig.svg",
        py::arg("size") = 800, py::arg("labels") = true, py::arg("sides") = false,
        "Render the construction as a standalone SVG file.");
}
