// Python bindings: graphs travel as graph6 or interchange text, reports as JSON.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "snarkmorph/classifier.hpp"
#include "snarkmorph/constructions.hpp"
#include "snarkmorph/criticality.hpp"
#include "snarkmorph/structure.hpp"
#include "snarkmorph/tait.hpp"

namespace py = pybind11;
using namespace snarkmorph;

PYBIND11_MODULE(_snarkmorph, m) {
    m.doc() = "snark morphology: colourings, criticality, structure and classification";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<Multipole>(m, "Multipole")
        .def_property_readonly("order", &Multipole::order)
        .def_property_readonly("semiedges", &Multipole::semiedge_count)
        .def_readonly("links", &Multipole::links)
        .def("is_graph", &Multipole::is_graph)
        .def("graph6", [](const Multipole& g) { return to_graph6(g); })
        .def("text", [](const Multipole& g) { return to_text(g); })
        .def("connectors", [](const Multipole& g) {
            std::vector<std::string> out;
            for (const auto& c : g.connectors) out.push_back(c.name);
            return out;
        })
        .def("__repr__", [](const Multipole& g) {
            return "<Multipole order " + std::to_string(g.order()) + ", " + std::to_string(g.semiedge_count()) +
                   " semiedges>";
        });

    m.def("from_graph6", &from_graph6, py::arg("line"));
    m.def("from_text", &from_text, py::arg("text"));
    m.def("petersen", &petersen);
    m.def("flower_snark", &flower_snark, py::arg("n"));
    m.def("build", [](const std::string& family) { return build(parse_family(family)); }, py::arg("family"),
          "Build a family member from a string such as 'NNN' or 'NNN:dyad,negJ5,dyad'.");
    m.def("family_names", &family_names);

    m.def("count_colourings", &count_colourings, py::arg("g"), py::call_guard<py::gil_scoped_release>());
    m.def("is_colourable", &is_colourable, py::arg("g"), py::call_guard<py::gil_scoped_release>());
    m.def(
        "colouring_set",
        [](const Multipole& g, const std::vector<std::string>& connectors) {
            ColouringSet s = connectors.empty() ? colouring_set(g) : colouring_set_in(g, connectors);
            std::vector<std::string> out;
            for (const auto& t : s.tuples()) out.push_back(tuple_string(t));
            return out;
        },
        py::arg("g"), py::arg("connectors") = std::vector<std::string>{});

    m.def("girth", [](const Multipole& g) -> std::optional<int> {
        int x = girth(g);
        if (x >= kInfinite) return std::nullopt;
        return x;
    });
    m.def("cyclic_connectivity", [](const Multipole& g) -> std::optional<int> {
        auto c = cyclic_connectivity(g);
        if (c.infinite) return std::nullopt;
        return c.value;
    });
    m.def("isomorphic", &isomorphic, py::arg("a"), py::arg("b"), py::arg("respect_connectors") = true);

    m.def(
        "grade_json", [](const Multipole& g) { return to_json(grade(g), g); }, py::arg("g"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "classify_json", [](const Multipole& g, const std::string& id) { return to_json(classify(g, id)); },
        py::arg("g"), py::arg("id") = "", py::call_guard<py::gil_scoped_release>());
    m.def(
        "classify_files_json",
        [](const std::vector<std::string>& paths, int min_cc) {
            CorpusFilter f;
            f.min_cc = min_cc;
            return to_json(classify_files(paths, std::nullopt, f));
        },
        py::arg("paths"), py::arg("min_cc") = 0, py::call_guard<py::gil_scoped_release>());
}
