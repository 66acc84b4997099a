#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isochron/errors.hpp"
#include "isochron/reports.hpp"

namespace py = pybind11;
using namespace isochron;

namespace {

// Reports cross the boundary as JSON text; the python side parses them.
std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lie-algebraic and numerical isochronicity checks for planar polynomial fields";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<NonPeriodicError>(m, "NonPeriodicError", PyExc_RuntimeError);

  m.def(
      "analyze",
      [](const std::string& field, int max_word_length, int series_depth, std::optional<std::string> mould) {
        const PlanarField f = parse_field(field);
        std::optional<Mould> md;
        if (mould) md = mould_from_json(parse_json(*mould));
        return dump(analyze_report(f, {max_word_length, series_depth}, md ? &*md : nullptr));
      },
      py::arg("field"), py::arg("max_word_length") = 6, py::arg("series_depth") = 3, py::arg("mould") = py::none(),
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "classify", [](const std::string& field) { return dump(classify_report(parse_field(field))); },
      py::arg("field"), py::call_guard<py::gil_scoped_release>());

  m.def(
      "scan_periods",
      [](const std::string& field, const std::vector<double>& radii, double tol) {
        return dump(scan_report(parse_field(field), radii, tol));
      },
      py::arg("field"), py::arg("radii") = std::vector<double>{0.02, 0.05, 0.1, 0.2}, py::arg("tol") = 1e-10,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "complexity",
      [](int degree, std::optional<std::string> condition) {
        std::optional<ConditionId> id;
        if (condition) id = parse_condition_id(*condition);
        return dump(complexity_report(id, degree));
      },
      py::arg("degree"), py::arg("condition") = py::none());

  m.def(
      "verify_lemmas",
      [](std::uint64_t seed, int max_word_length) {
        SuiteOptions opts;
        opts.seed = seed;
        opts.max_word_length = max_word_length;
        return dump(lemma_report(opts));
      },
      py::arg("seed") = SuiteOptions{}.seed, py::arg("max_word_length") = 6, py::call_guard<py::gil_scoped_release>());
}
