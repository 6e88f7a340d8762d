#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordramsey/biclique.hpp"
#include "ordramsey/curves_ramsey.hpp"
#include "ordramsey/generators.hpp"
#include "ordramsey/io.hpp"
#include "ordramsey/magical.hpp"
#include "ordramsey/matching_engine.hpp"
#include "ordramsey/path_engine.hpp"

namespace py = pybind11;
using namespace ordramsey;

namespace {

// JSON crosses the boundary as text; the Python side sees plain dicts/lists.
py::object to_py(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }
Json from_py(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

CurveOrdering parse_ordering(const std::string& name) {
  if (name == "grounded") return CurveOrdering::GroundedY;
  if (name == "right-endpoint") return CurveOrdering::RightEndpoint;
  if (name == "none") return CurveOrdering::None;
  throw std::invalid_argument("ordering must be grounded, right-endpoint or none");
}

CurveFamily curves_arg(const py::object& doc, const std::string& ordering) {
  return curves_from_json(from_py(doc), parse_ordering(ordering));
}

py::dict biclique_dict(const Biclique& b) {
  py::dict d;
  d["a"] = b.a;
  d["b"] = b.b;
  d["in_complement"] = b.in_complement;
  return d;
}

Biclique biclique_arg(const py::dict& d) {
  return {d["a"].cast<VertexSet>(), d["b"].cast<VertexSet>(), d["in_complement"].cast<bool>()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ordered-graph Ramsey extraction with re-verifiable certificates";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_RuntimeError);

  py::class_<OrderedGraph>(m, "OrderedGraph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return OrderedGraph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &OrderedGraph::size)
      .def("__len__", &OrderedGraph::size)
      .def("edge_count", &OrderedGraph::edge_count)
      .def("has_edge", &OrderedGraph::has_edge)
      .def("add_edge", &OrderedGraph::add_edge)
      .def("edges", &OrderedGraph::edges)
      .def("neighbors", &OrderedGraph::neighbors)
      .def("complement", [](const OrderedGraph& g) { return complement(g); })
      .def("to_json", [](const OrderedGraph& g) { return to_py(graph_to_json(g)); })
      .def_static("from_json", [](const py::object& doc) { return graph_from_json(from_py(doc)); })
      .def(py::self == py::self)
      .def("__repr__", [](const OrderedGraph& g) {
        return "OrderedGraph(n=" + std::to_string(g.size()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  // Patterns and embeddings.
  m.def("monotone_path", &monotone_path, py::arg("k"));
  m.def("intertwined_matching", &intertwined_matching);
  m.def("ordered_matching", [](const std::vector<std::pair<Vertex, Vertex>>& pairs) { return ordered_matching(pairs); });
  m.def(
      "find_induced_embedding",
      [](const OrderedGraph& g, const Pattern& p) -> std::optional<std::vector<Vertex>> {
        if (auto e = find_induced_embedding(g, p)) return e->image;
        return std::nullopt;
      },
      py::arg("graph"), py::arg("pattern"));
  m.def("is_induced_embedding", [](const OrderedGraph& g, const Pattern& p, const std::vector<Vertex>& image) {
    return is_induced_embedding(g, p, Embedding{image});
  });

  // Bi-cliques.
  m.def("is_biclique", [](const OrderedGraph& g, const py::dict& b) { return is_biclique(g, biclique_arg(b)); });
  m.def(
      "max_biclique_oracle",
      [](const OrderedGraph& g, bool in_complement) { return biclique_dict(max_biclique_oracle(g, in_complement)); },
      py::arg("graph"), py::arg("in_complement") = false);

  // Engines. Outcomes come back as {"variant": ..., ...} dicts.
  m.def(
      "monotone_reach",
      [](const OrderedGraph& g, const VertexSet& s, const VertexSet& t) { return monotone_reach(g, s, t).reached; },
      py::arg("graph"), py::arg("sources"), py::arg("targets"));
  m.def(
      "find_path_or_cobiclique",
      [](const OrderedGraph& g, int k) { return to_py(outcome_to_json(find_path_or_cobiclique(g, k))); },
      py::arg("graph"), py::arg("k"));
  m.def(
      "find_matching_or_cobiclique",
      [](const OrderedGraph& g, const Pattern& p, std::uint64_t seed, long retry_cap, bool exhaustive) {
        return to_py(outcome_to_json(find_matching_or_cobiclique(g, p, {seed, retry_cap, exhaustive})));
      },
      py::arg("graph"), py::arg("pattern"), py::arg("seed"), py::arg("retry_cap") = 0,
      py::arg("exhaustive") = false);
  m.def("path_degree_gate_ok", &path_degree_gate_ok);
  m.def("matching_degree_gate_ok", &matching_degree_gate_ok);

  // Generators.
  m.def("gen_two_clique", &gen_two_clique, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("gen_four_clique", &gen_four_clique, py::arg("n"), py::arg("epsilon"), py::arg("seed"));
  m.def("gen_random_ordered", &gen_random_ordered, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "gen_grounded_curves",
      [](int n, int segs, std::uint64_t seed) { return to_py(curves_to_json(gen_grounded_curves(n, segs, seed))); },
      py::arg("n"), py::arg("segments"), py::arg("seed"));
  m.def(
      "gen_crossing_curves",
      [](int n, int segs, std::uint64_t seed, double jitter) {
        return to_py(curves_to_json(gen_crossing_curves(n, segs, 0, seed, jitter)));
      },
      py::arg("n"), py::arg("segments"), py::arg("seed"), py::arg("jitter") = 2.0);
  m.def(
      "gen_random_curves",
      [](int n, int segs, std::uint64_t seed, int width, int height, int max_length) {
        return to_py(curves_to_json(gen_random_curves(n, segs, seed, width, height, max_length)));
      },
      py::arg("n"), py::arg("segments"), py::arg("seed"), py::arg("width") = 100, py::arg("height") = 100,
      py::arg("max_length") = 10);

  // Curves. Families use the file format: [{"points": [[xn, xd, yn, yd], ...]}, ...].
  m.def(
      "intersection_graph",
      [](const py::object& doc, const std::string& ordering) {
        const auto cg = intersection_graph(curves_arg(doc, ordering));
        return py::make_tuple(cg.graph, cg.order);
      },
      py::arg("curves"), py::arg("ordering") = "right-endpoint");
  m.def(
      "curves_ramsey",
      [](const py::object& doc, std::uint64_t seed) {
        CurvesOptions opt;
        opt.seed = seed;
        const auto out = curves_ramsey(curves_arg(doc, "right-endpoint"), opt);
        py::dict d;
        d["certificate"] = biclique_dict(out.certificate);
        d["case"] = out.case_id;
        d["stage"] = out.stage;
        d["order"] = out.order;
        d["graph"] = out.graph;
        return d;
      },
      py::arg("curves"), py::arg("seed"));
  m.def(
      "threshold_pipeline",
      [](const py::object& doc, double epsilon) {
        const auto out = threshold_pipeline(curves_arg(doc, "right-endpoint"), epsilon);
        py::dict d;
        d["certificate"] = biclique_dict(out.certificate);
        d["case"] = out.case_id;
        d["density"] = out.density;
        d["edge_budget_ok"] = out.edge_budget_ok;
        d["stage"] = out.stage;
        d["order"] = out.order;
        d["graph"] = out.graph;
        return d;
      },
      py::arg("curves"), py::arg("epsilon"));
  m.def(
      "extract_dense",
      [](const py::object& doc, const std::string& line) {
        const auto w = double_magical_witness(curves_arg(doc, "none"), parse_rational(line));
        const auto ex = extract_biclique_dense(w.triple);
        py::dict d;
        d["certificate"] = biclique_dict(ex.biclique);
        d["order_type"] = ex.type.str();
        d["forcing_configurations"] = ex.forcing_configurations;
        d["graph"] = w.triple.graph();
        d["order"] = w.order;
        return d;
      },
      py::arg("curves"), py::arg("line") = "0");

  m.def("verify_forcing_claim", []() {
    const auto r = verify_forcing_claim();
    py::dict d;
    d["orderings_checked"] = r.orderings_checked;
    d["all_contain_forcing"] = r.all_contain_forcing;
    d["tuples_examined"] = r.tuples_examined;
    d["forcing_tuples"] = r.forcing_tuples;
    return d;
  });

  // Files and records.
  m.def("validate_document", [](const py::object& doc) { return validate_document(from_py(doc)); });
  m.def("sha256_hex", [](const std::string& s) { return sha256_hex(s); });
}
