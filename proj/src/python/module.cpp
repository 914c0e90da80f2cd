#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "curvedhh/bar.hpp"
#include "curvedhh/category_io.hpp"
#include "curvedhh/cyclic.hpp"
#include "curvedhh/errors.hpp"
#include "curvedhh/report.hpp"

namespace py = pybind11;
using namespace curvedhh;

namespace {

Field field_of(const ExamplePair& p, const std::string& field) {
  return field.empty() ? p.b->field() : Field::parse(field);
}

CurvedCategory curved(const ExamplePair& p, int pmax) { return CurvedCategory(p.a, p.b, pmax); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Betti tables for the curved category built from a directed A inside B";
  m.attr("__version__") = kToolVersion;
  m.attr("conventions_hash") = conventions_hash();

  // Messages start with the diagnostic code, e.g. "E_PARSE: ...".
  static py::exception<Error> error(m, "CurvedError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (e.code() + ": " + e.what()).c_str());
    }
  });

  py::class_<ExamplePair>(m, "Pair")
      .def_readonly("name", &ExamplePair::name)
      .def_readonly("dimension", &ExamplePair::dimension)
      .def_readonly("notes", &ExamplePair::notes)
      .def_property_readonly("objects", [](const ExamplePair& p) { return p.b->objects(); })
      .def_property_readonly("field", [](const ExamplePair& p) { return p.b->field().name(); })
      .def_property_readonly("generators",
                             [](const ExamplePair& p) {
                               std::vector<py::tuple> out;
                               for (const auto& g : p.b->generators())
                                 out.push_back(py::make_tuple(g.name, p.b->objects()[g.source],
                                                              p.b->objects()[g.target], g.degree));
                               return out;
                             })
      .def_property_readonly("a_generators",
                             [](const ExamplePair& p) {
                               std::vector<std::string> out;
                               for (const auto& g : p.a->generators()) out.push_back(g.name);
                               return out;
                             })
      .def("to_text", [](const ExamplePair& p) { return write_category(document_from_pair(p)); })
      .def("__repr__", [](const ExamplePair& p) {
        return "<Pair " + p.name + ": " + std::to_string(p.b->object_count()) + " objects>";
      });

  m.def("example_names", &example_names);
  m.def(
      "generate",
      [](const std::string& name, int m_, int d, const std::string& field) {
        return generate_example(name, m_, d, field.empty() ? Field::rationals() : Field::parse(field));
      },
      py::arg("name"), py::arg("m") = 2, py::arg("d") = 2, py::arg("field") = "");
  m.def(
      "parse",
      [](const std::string& text, bool validate) { return pair_from_document(parse_category(text, validate)); },
      py::arg("text"), py::arg("validate") = true);
  m.def(
      "load", [](const std::string& path) { return pair_from_document(read_category(path)); }, py::arg("path"));

  m.def(
      "hochschild",
      [](const ExamplePair& p, int pmax, const std::string& field) {
        return hochschild_betti_table(curved(p, pmax), pmax, field_of(p, field));
      },
      py::arg("pair"), py::arg("pmax"), py::arg("field") = "", py::call_guard<py::gil_scoped_release>());
  m.def(
      "e1",
      [](const ExamplePair& p, int pmax, const std::string& field) {
        auto page = e1_page(curved(p, pmax), pmax, field_of(p, field));
        return std::make_tuple(std::move(page.e1), std::move(page.d1_rank), std::move(page.e2));
      },
      py::arg("pair"), py::arg("pmax"), py::arg("field") = "", py::call_guard<py::gil_scoped_release>());
  m.def(
      "bar",
      [](const ExamplePair& p, int pmax, const std::string& field) {
        return bar_betti_table(curved(p, pmax), pmax, field_of(p, field));
      },
      py::arg("pair"), py::arg("pmax"), py::arg("field") = "", py::call_guard<py::gil_scoped_release>());
  m.def(
      "connes",
      [](const ExamplePair& p, int pmax, const std::string& field) {
        return connes_betti(curved(p, pmax), pmax, field_of(p, field)).betti;
      },
      py::arg("pair"), py::arg("pmax"), py::arg("field") = "", py::call_guard<py::gil_scoped_release>());
  m.def(
      "donaldson",
      [](const ExamplePair& p, std::optional<int> d, const std::string& field) {
        return donaldson_betti(*p.a, *p.b, d.value_or(p.dimension), field_of(p, field));
      },
      py::arg("pair"), py::arg("d") = py::none(), py::arg("field") = "");
  m.def(
      "insert_a_acyclic",
      [](const ExamplePair& p, const std::string& field) {
        const auto r = insert_a_subcomplex_check(curved(p, 1), field_of(p, field));
        return r.closed && r.acyclic;
      },
      py::arg("pair"), py::arg("field") = "");
  m.def(
      "serre_step_matches",
      [](const ExamplePair& p, const std::string& field) {
        return compare_serre_step(curved(p, 1), field_of(p, field)).match;
      },
      py::arg("pair"), py::arg("field") = "");
  m.def("to_csv", &to_csv, py::arg("rows"));
  m.def(
      "parse_csv", [](const std::string& text) { return parse_csv(text); }, py::arg("text"));
}
