#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpg/actor.hpp"
#include "bpg/io.hpp"
#include "bpg/oracle.hpp"
#include "bpg/random.hpp"
#include "bpg/relation.hpp"

namespace py = pybind11;
using namespace bpg;

namespace {

GraphPtr make_graph(const std::string& name, const std::vector<std::string>& vertices,
                    const std::vector<std::tuple<std::string, std::string, std::string>>&
                        edges) {
  GraphData data;
  data.name = name;
  data.vertices = vertices;
  for (const auto& [id, src, rng] : edges)
    data.edges.push_back({id, src, rng});
  return DirectedGraph::make(std::move(data));
}

Workspace workspace_of(const GraphPtr& a, const GraphPtr& b) {
  Workspace ws;
  ws.add_graph(a);
  if (!same_graph(a, b))
    ws.add_graph(b);
  return ws;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "compact-open bisection calculus for boundary path groupoids";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);

  py::class_<DirectedGraph, std::shared_ptr<DirectedGraph>>(m, "DirectedGraph")
      .def(py::init([](const std::string& name,
                       const std::vector<std::string>& vertices,
                       const std::vector<std::tuple<std::string, std::string,
                                                    std::string>>& edges) {
             return std::const_pointer_cast<DirectedGraph>(
                 make_graph(name, vertices, edges));
           }),
           py::arg("name"), py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("name", &DirectedGraph::name)
      .def_property_readonly("vertices",
                             [](const DirectedGraph& g) {
                               std::vector<std::string> out;
                               for (int v : g.vertices_in_order())
                                 out.push_back(g.vertex_id(v));
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const DirectedGraph& g) {
                               std::vector<std::tuple<std::string, std::string,
                                                      std::string>>
                                   out;
                               for (int e : g.edges_in_order())
                                 out.emplace_back(g.edge_id(e),
                                                  g.vertex_id(g.src(e)),
                                                  g.vertex_id(g.rng(e)));
                               return out;
                             })
      .def_property_readonly("regular_vertices",
                             [](const DirectedGraph& g) {
                               std::vector<std::string> out;
                               for (int v : g.regular_vertices())
                                 out.push_back(g.vertex_id(v));
                               return out;
                             })
      .def("is_acyclic", &DirectedGraph::is_acyclic)
      .def("__repr__", [](const DirectedGraph& g) {
        return "DirectedGraph(" + g.name() + ", |V|=" +
               std::to_string(g.vertex_count()) + ", |E|=" +
               std::to_string(g.edge_count()) + ")";
      });

  m.def("graph_from_json", [](const std::string& text, const std::string& name) {
    return std::const_pointer_cast<DirectedGraph>(
        DirectedGraph::make(parse_graph_data(json::parse(text), name)));
  });
  m.def("graph_to_json",
        [](const GraphPtr& g) { return dump_canonical(to_json(g)); });

  py::class_<Path>(m, "Path")
      .def_property_readonly("length", &Path::length)
      .def_property_readonly("is_vertex", &Path::is_vertex)
      .def_property_readonly("range",
                             [](const Path& p) {
                               return p.graph()->vertex_id(p.range_vertex());
                             })
      .def_property_readonly("source",
                             [](const Path& p) {
                               return p.graph()->vertex_id(p.source_vertex());
                             })
      .def(py::self == py::self)
      .def("__repr__", [](const Path& p) { return "Path(" + to_string(p) + ")"; });

  m.def("vertex_path", [](const GraphPtr& g, const std::string& v) {
    return Path::at_vertex(g, v);
  });
  m.def("edge_path", [](const GraphPtr& g, const std::vector<std::string>& edges) {
    return Path::from_edge_ids(g, edges);
  });
  m.def("concat", &concat);
  m.def("is_prefix", &is_prefix);
  m.def("comparable", &comparable);
  m.def("is_boundary_path", &is_boundary_path);

  py::class_<CylinderSet>(m, "CylinderSet")
      .def_property_readonly("generators", &CylinderSet::generators)
      .def("is_empty", &CylinderSet::is_empty)
      .def("union_with", &CylinderSet::union_with)
      .def("difference", &CylinderSet::difference)
      .def("intersection", &CylinderSet::intersection)
      .def("subset_of", &CylinderSet::subset_of)
      .def(py::self == py::self)
      .def("__repr__",
           [](const CylinderSet& s) { return "CylinderSet" + to_string(s); });

  m.def("cylinder", [](const GraphPtr& g, const std::vector<Path>& gens) {
    return CylinderSet::canonicalize(g, gens);
  });
  m.def("full_unit_space", &full_unit_space);

  py::class_<Bisection>(m, "Bisection")
      .def_property_readonly("generators", &Bisection::generators)
      .def("is_empty", &Bisection::is_empty)
      .def("product", &Bisection::product)
      .def("inverse", &Bisection::inverse)
      .def("range_set", &Bisection::range_set)
      .def("source_set", &Bisection::source_set)
      .def("union_with", &Bisection::union_with)
      .def(py::self == py::self)
      .def("__repr__",
           [](const Bisection& b) { return "Bisection" + to_string(b); });

  m.def("bisection",
        [](const GraphPtr& g, const std::vector<std::pair<Path, Path>>& pairs) {
          return Bisection::canonicalize(g, pairs);
        });
  m.def("embed_identity", &embed_identity);

  py::class_<DckFamily>(m, "DckFamily")
      .def(py::init([](GraphPtr source, GraphPtr ambient,
                       std::map<std::string, CylinderSet> omega,
                       std::map<std::string, Bisection> t) {
             DckFamily f{std::move(source), std::move(ambient), std::move(omega),
                         std::move(t)};
             f.check_wellformed();
             return f;
           }),
           py::arg("source_graph"), py::arg("ambient_graph"), py::arg("omega"),
           py::arg("t"))
      .def_readonly("source_graph", &DckFamily::source_graph)
      .def_readonly("ambient_graph", &DckFamily::ambient_graph)
      .def_readonly("omega", &DckFamily::omega)
      .def_readonly("t", &DckFamily::t)
      .def(py::self == py::self);

  m.def("verify_family_json",
        [](const DckFamily& f) { return dump_canonical(to_json(verify_family(f))); });
  m.def("is_nondegenerate", &is_nondegenerate);
  m.def("family_to_json",
        [](const DckFamily& f) { return dump_canonical(to_json(f)); });
  m.def("family_from_json",
        [](const std::string& text, const GraphPtr& source, const GraphPtr& ambient) {
          return parse_family(json::parse(text), workspace_of(source, ambient));
        });

  py::class_<RelationMorphism>(m, "RelationMorphism")
      .def(py::init([](GraphPtr source, GraphPtr target,
                       std::vector<std::pair<std::string, std::string>> r0,
                       std::vector<std::pair<Path, std::string>> r1) {
             RelationMorphism r{std::move(source), std::move(target), std::move(r0),
                                std::move(r1)};
             r.normalize();
             return r;
           }),
           py::arg("source_graph"), py::arg("target_graph"), py::arg("r0"),
           py::arg("r1"))
      .def_readonly("source_graph", &RelationMorphism::source_graph)
      .def_readonly("target_graph", &RelationMorphism::target_graph)
      .def_readonly("r0", &RelationMorphism::r0)
      .def_readonly("r1", &RelationMorphism::r1)
      .def(py::self == py::self);

  m.def("validate_relation_json", [](const RelationMorphism& r) {
    return dump_canonical(to_json(validate_relation(r)));
  });
  m.def("check_admissible_json", [](const RelationMorphism& r) {
    return dump_canonical(to_json(check_admissible(r)));
  });
  m.def("relation_to_family", &relation_to_family);
  m.def("family_to_relation", &family_to_relation);
  m.def("relation_to_json",
        [](const RelationMorphism& r) { return dump_canonical(to_json(r)); });
  m.def("relation_from_json",
        [](const std::string& text, const GraphPtr& source, const GraphPtr& target) {
          return parse_relation(json::parse(text), workspace_of(source, target));
        });

  py::class_<Theta>(m, "Theta")
      .def(py::init<DckFamily>())
      .def("path_image", &Theta::path_image)
      .def("map_cylinder", &Theta::map_cylinder)
      .def("map_bisection", &Theta::map_bisection);

  m.def("identity_family", &identity_family);
  m.def("compose_families", &compose_families);
  m.def("verify_inverse_json", [](const DckFamily& f, const DckFamily& g) {
    return dump_canonical(to_json(verify_inverse(f, g)));
  });
  m.def("search_inverse", &search_inverse, py::arg("family"), py::arg("max_len"));

  py::class_<GroupoidArrow>(m, "GroupoidArrow")
      .def_readonly("range_path", &GroupoidArrow::range_path)
      .def_readonly("offset", &GroupoidArrow::offset)
      .def_readonly("source_path", &GroupoidArrow::source_path)
      .def("__repr__", [](const GroupoidArrow& a) {
        return "(" + to_string(a.range_path) + ", " + std::to_string(a.offset) +
               ", " + to_string(a.source_path) + ")";
      });

  m.def("boundary_paths", &boundary_paths);
  m.def("materialize_groupoid", &materialize_groupoid);
  m.def("eval_cylinder", [](const CylinderSet& s) {
    const auto set = eval_cylinder(s);
    return std::vector<Path>(set.begin(), set.end());
  });
  m.def("eval_bisection", [](const Bisection& b) {
    const auto set = eval_bisection(b);
    return std::vector<GroupoidArrow>(set.begin(), set.end());
  });

  m.def("oracle_check_json", [](std::uint64_t seed, int cases) {
    const auto summary = oracle_check(seed, cases);
    return dump_canonical(json{{"seed", summary.seed},
                               {"cases", summary.cases},
                               {"discrepancies", summary.discrepancies},
                               {"failures", summary.failures}});
  });
}
