#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "powergraph/ap.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"
#include "powergraph/group_spec.hpp"
#include "powergraph/power_graph.hpp"
#include "powergraph/products.hpp"
#include "powergraph/verify.hpp"

namespace py = pybind11;
namespace pg = powergraph;

namespace {

pg::ExportFormat format_from(const std::string& name) {
  const auto f = pg::parse_export_format(name);
  if (!f) throw py::value_error("unknown format '" + name + "' (dot, edgelist, json)");
  return *f;
}

py::tuple ap_tuple(const pg::ApPair& p) { return py::make_tuple(p.start, p.step); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Power graphs of finite groups and their graph products";

  auto group_error = py::register_exception<pg::GroupError>(m, "GroupError", PyExc_ValueError);
  py::register_exception<pg::SpecParseError>(m, "SpecParseError", group_error.ptr());
  py::register_exception<pg::GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<pg::FiniteGroup>(m, "FiniteGroup")
      .def_static("from_cayley_table", &pg::FiniteGroup::from_cayley_table, py::arg("table"),
                  py::arg("name") = "")
      .def_property_readonly("order", &pg::FiniteGroup::order)
      .def_property_readonly("identity", &pg::FiniteGroup::identity)
      .def_property_readonly("name", &pg::FiniteGroup::name)
      .def("multiply", &pg::FiniteGroup::multiply)
      .def("element_order", &pg::FiniteGroup::element_order)
      .def("power", &pg::FiniteGroup::power)
      .def("label", &pg::FiniteGroup::label)
      .def("__len__", &pg::FiniteGroup::order)
      .def("__repr__", [](const pg::FiniteGroup& g) {
        return "<FiniteGroup " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("cyclic", &pg::cyclic, py::arg("n"));
  m.def("dihedral", &pg::dihedral, py::arg("n"), "Dihedral group of order 2n.");
  m.def("symmetric", &pg::symmetric, py::arg("n"));
  m.def("quaternion8", &pg::quaternion8);
  m.def("direct_product", &pg::direct_product, py::arg("g1"), py::arg("g2"),
        py::arg("order_cap") = pg::kDefaultOrderCap);
  m.def("parse_group", &pg::parse_group_spec, py::arg("spec"),
        py::arg("order_cap") = pg::kDefaultOrderCap,
        "Parse C<n>, D<n>, S<n>, Q8 or cayley:<path>, joined by 'x'.");

  py::class_<pg::SimpleGraph>(m, "Graph")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def(py::init<std::size_t, std::vector<std::string>>(), py::arg("n"), py::arg("labels"))
      .def("add_edge", &pg::SimpleGraph::add_edge)
      .def("adjacent", &pg::SimpleGraph::adjacent)
      .def("degree", &pg::SimpleGraph::degree)
      .def("neighbors", &pg::SimpleGraph::neighbors)
      .def("edges", &pg::SimpleGraph::edges)
      .def_property_readonly("vertex_count", &pg::SimpleGraph::vertex_count)
      .def_property_readonly("edge_count", &pg::SimpleGraph::edge_count)
      .def_property_readonly("labels", &pg::SimpleGraph::labels)
      .def("export", [](const pg::SimpleGraph& g, const std::string& fmt) {
        return pg::export_graph(g, format_from(fmt));
      }, py::arg("format") = "edgelist")
      .def_static("from_json", [](const std::string& text) { return pg::import_json_graph(text); })
      .def("__eq__", &pg::graphs_equal_labeled)
      .def("__repr__", [](const pg::SimpleGraph& g) {
        return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<pg::Generalization>(m, "Generalization")
      .def(py::init<std::size_t>(), py::arg("n"))
      .def_property_readonly("vertex_count", &pg::Generalization::vertex_count)
      .def("set", [](pg::Generalization& w, pg::Vertex u, pg::Vertex v, std::uint64_t start,
                     std::uint64_t step) { w.set(u, v, {start, step}); })
      .def("at", [](const pg::Generalization& w, pg::Vertex u, pg::Vertex v) {
        return ap_tuple(w.at(u, v));
      })
      .def("dump", &pg::dump_weights);

  m.def("power_graph", &pg::power_graph, py::arg("group"));
  m.def("power_weights", &pg::power_weights, py::arg("group"));
  m.def("exponent_set_window", &pg::exponent_set_window, py::arg("group"), py::arg("a"),
        py::arg("b"), py::arg("bound"));

  m.def("direct_product_graph", &pg::direct_product_graph, py::arg("a"), py::arg("b"),
        py::arg("cap") = pg::kDefaultProductCap);
  m.def("cartesian_product_graph", &pg::cartesian_product_graph, py::arg("a"), py::arg("b"),
        py::arg("cap") = pg::kDefaultProductCap);
  m.def("normal_product_graph", &pg::normal_product_graph, py::arg("a"), py::arg("b"),
        py::arg("cap") = pg::kDefaultProductCap);
  m.def("generalized_product_graph", &pg::generalized_product_graph, py::arg("a"), py::arg("wa"),
        py::arg("b"), py::arg("wb"), py::arg("cap") = pg::kDefaultProductCap);

  m.def("aps_intersect", [](std::uint64_t a, std::uint64_t d, std::uint64_t b, std::uint64_t e) {
    return pg::aps_intersect_positively({a, d}, {b, e});
  });
  m.def("are_isomorphic", &pg::are_isomorphic);
  m.def("find_isomorphism", &pg::find_isomorphism);
  m.def("has_universal_vertex", &pg::has_universal_vertex);

  m.def("verify_all", [](std::size_t max_order, std::uint64_t seed, bool verbose) {
    pg::VerifyOptions options;
    options.max_order = max_order;
    options.seed = seed;
    const auto reports = pg::verify_all(options);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed();
    return py::make_tuple(ok, pg::format_reports(reports, verbose));
  }, py::arg("max_order") = 36, py::arg("seed") = 0, py::arg("verbose") = false,
     "Run every sweep; returns (passed, report_text).");
}
