#include "bpg/io.hpp"

#include <algorithm>

namespace bpg {

void Workspace::add_graph(GraphPtr g) {
  const auto name = g->name();
  if (name.empty())
    throw ParseError("workspace graphs must be named");
  auto it = graphs_.find(name);
  if (it != graphs_.end()) {
    if (!same_graph(it->second, g))
      throw ParseError("workspace already holds a different graph named " + name);
    return;
  }
  graphs_.emplace(name, std::move(g));
}

const GraphPtr& Workspace::graph(const std::string& name) const {
  auto it = graphs_.find(name);
  if (it == graphs_.end())
    throw ParseError("unknown graph: " + name);
  return it->second;
}

std::vector<GraphPtr> Workspace::graphs() const {
  std::vector<GraphPtr> out;
  for (const auto& [name, g] : graphs_)
    out.push_back(g);
  return out;
}

namespace {

const json& require(const json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(context) + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::string require_string(const json& j, const char* context) {
  if (!j.is_string())
    throw ParseError(std::string(context) + ": expected a string");
  return j.get<std::string>();
}

} // namespace

GraphData parse_graph_data(const json& j, const std::string& fallback_name) {
  GraphData data;
  data.name = j.is_object() && j.contains("name")
                  ? require_string(j.at("name"), "graph name")
                  : fallback_name;
  for (const auto& v : require(j, "vertices", "graph"))
    data.vertices.push_back(require_string(v, "graph vertex"));
  for (const auto& e : require(j, "edges", "graph")) {
    EdgeData edge;
    edge.id = require_string(require(e, "id", "graph edge"), "edge id");
    edge.src = require_string(require(e, "src", "graph edge"), "edge src");
    edge.rng = require_string(require(e, "rng", "graph edge"), "edge rng");
    data.edges.push_back(std::move(edge));
  }
  return data;
}

Path parse_path(const json& j, const GraphPtr& g) {
  if (j.is_object() && j.contains("vertex")) {
    const auto id = require_string(j.at("vertex"), "path vertex");
    if (g->vertex_index(id) < 0)
      throw ParseError("path: unknown vertex " + id);
    return Path::at_vertex(g, id);
  }
  if (j.is_object() && j.contains("edges")) {
    std::vector<std::string> ids;
    for (const auto& e : j.at("edges"))
      ids.push_back(require_string(e, "path edge"));
    if (ids.empty())
      throw ParseError("path: \"edges\" must be nonempty");
    for (const auto& id : ids)
      if (g->edge_index(id) < 0)
        throw ParseError("path: unknown edge " + id);
    try {
      return Path::from_edge_ids(g, ids);
    } catch (const ComposabilityError& e) {
      throw ParseError(std::string("path: ") + e.what());
    }
  }
  throw ParseError("path: expected {\"vertex\": ...} or {\"edges\": [...]}");
}

CylinderSet parse_cylinder(const json& j, const Workspace& ws) {
  const auto& g = ws.graph(require_string(require(j, "graph", "cylinder"), "graph name"));
  std::vector<Path> gens;
  for (const auto& p : require(j, "paths", "cylinder"))
    gens.push_back(parse_path(p, g));
  return CylinderSet::canonicalize(g, std::move(gens));
}

Bisection parse_bisection(const json& j, const Workspace& ws) {
  const auto& g = ws.graph(require_string(require(j, "graph", "bisection"), "graph name"));
  std::vector<BisectionPair> gens;
  for (const auto& p : require(j, "pairs", "bisection")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("bisection: each pair must be a two-element array");
    gens.emplace_back(parse_path(p.at(0), g), parse_path(p.at(1), g));
  }
  try {
    return Bisection::canonicalize(g, std::move(gens));
  } catch (const ComposabilityError& e) {
    throw ParseError(std::string("bisection: ") + e.what());
  }
}

DckFamily parse_family(const json& j, const Workspace& ws) {
  DckFamily f;
  f.source_graph =
      ws.graph(require_string(require(j, "source_graph", "family"), "graph name"));
  f.ambient_graph =
      ws.graph(require_string(require(j, "ambient_graph", "family"), "graph name"));
  for (const auto& [v, s] : require(j, "omega", "family").items()) {
    if (f.source_graph->vertex_index(v) < 0)
      throw ParseError("family omega: unknown source vertex " + v);
    f.omega.emplace(v, parse_cylinder(s, ws));
  }
  for (const auto& [e, b] : require(j, "t", "family").items()) {
    if (f.source_graph->edge_index(e) < 0)
      throw ParseError("family t: unknown source edge " + e);
    f.t.emplace(e, parse_bisection(b, ws));
  }
  f.check_wellformed();
  return f;
}

RelationMorphism parse_relation(const json& j, const Workspace& ws) {
  RelationMorphism r;
  r.source_graph =
      ws.graph(require_string(require(j, "source_graph", "relation"), "graph name"));
  r.target_graph =
      ws.graph(require_string(require(j, "target_graph", "relation"), "graph name"));
  for (const auto& p : require(j, "r0", "relation")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("relation r0: each pair must be a two-element array");
    r.r0.emplace_back(require_string(p.at(0), "r0 vertex"),
                      require_string(p.at(1), "r0 vertex"));
  }
  for (const auto& p : require(j, "r1", "relation")) {
    if (!p.is_array() || p.size() != 2)
      throw ParseError("relation r1: each pair must be a two-element array");
    r.r1.emplace_back(parse_path(p.at(0), r.source_graph),
                      require_string(p.at(1), "r1 edge"));
  }
  r.normalize();
  return r;
}

json to_json(const GraphPtr& g) {
  json j;
  json vertices = json::array();
  for (int v : g->vertices_in_order())
    vertices.push_back(g->vertex_id(v));
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (int e : g->edges_in_order())
    edges.push_back(json{{"id", g->edge_id(e)},
                         {"src", g->vertex_id(g->src(e))},
                         {"rng", g->vertex_id(g->rng(e))}});
  j["edges"] = std::move(edges);
  return j;
}

json to_json(const Path& p) {
  if (p.is_vertex())
    return json{{"vertex", p.graph()->vertex_id(p.vertex())}};
  json edges = json::array();
  for (int i = 0; i < p.length(); ++i)
    edges.push_back(p.graph()->edge_id(p.edge(i)));
  return json{{"edges", std::move(edges)}};
}

json to_json(const CylinderSet& s) {
  json paths = json::array();
  for (const auto& p : s.generators())
    paths.push_back(to_json(p));
  return json{{"graph", s.graph()->name()}, {"paths", std::move(paths)}};
}

json to_json(const Bisection& b) {
  json pairs = json::array();
  for (const auto& [x, y] : b.generators())
    pairs.push_back(json::array({to_json(x), to_json(y)}));
  return json{{"graph", b.graph()->name()}, {"pairs", std::move(pairs)}};
}

json to_json(const DckFamily& f) {
  json omega = json::object();
  for (int v : f.source_graph->vertices_in_order()) {
    const auto& id = f.source_graph->vertex_id(v);
    omega[id] = to_json(f.omega.at(id));
  }
  json t = json::object();
  for (int e : f.source_graph->edges_in_order()) {
    const auto& id = f.source_graph->edge_id(e);
    t[id] = to_json(f.t.at(id));
  }
  return json{{"source_graph", f.source_graph->name()},
              {"ambient_graph", f.ambient_graph->name()},
              {"omega", std::move(omega)},
              {"t", std::move(t)}};
}

json to_json(const RelationMorphism& r) {
  RelationMorphism sorted = r;
  sorted.normalize();
  json r0 = json::array();
  for (const auto& [u, v] : sorted.r0)
    r0.push_back(json::array({u, v}));
  json r1 = json::array();
  for (const auto& [x, f] : sorted.r1)
    r1.push_back(json::array({to_json(x), f}));
  return json{{"source_graph", r.source_graph->name()},
              {"target_graph", r.target_graph->name()},
              {"r0", std::move(r0)},
              {"r1", std::move(r1)}};
}

namespace {

json verdict_json(const ConditionVerdict<VertexOverlapWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(
        json{{"v", w.v}, {"w", w.w}, {"overlap", to_json(w.overlap)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

json verdict_json(const ConditionVerdict<EdgeConditionWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(json{{"edge", w.edge},
                            {"kind", w.kind},
                            {"expected", to_json(w.expected)},
                            {"computed", to_json(w.computed)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

json verdict_json(const ConditionVerdict<RangeOverlapWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(
        json{{"e", w.e}, {"f", w.f}, {"overlap", to_json(w.overlap)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

json verdict_json(const ConditionVerdict<RegularCoverWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(json{{"vertex", w.vertex},
                            {"expected", to_json(w.expected)},
                            {"computed", to_json(w.computed)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

json verdict_json(const ConditionVerdict<VertexCompatWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(json{{"ambient_vertex", w.ambient_vertex},
                            {"source_vertex", w.source_vertex},
                            {"computed", to_json(w.computed)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

json verdict_json(const ConditionVerdict<EdgeCompatWitness>& v) {
  json failures = json::array();
  for (const auto& w : v.failures)
    failures.push_back(json{{"edge", w.edge},
                            {"ambient_vertex", w.ambient_vertex},
                            {"computed", to_json(w.computed)}});
  return json{{"pass", v.pass}, {"failures", std::move(failures)}};
}

} // namespace

json to_json(const VerificationReport& report) {
  return json{{"dck1", verdict_json(report.dck1)},
              {"dck2", verdict_json(report.dck2)},
              {"dck3", verdict_json(report.dck3)},
              {"dck4", verdict_json(report.dck4)},
              {"nondegenerate", report.nondegenerate},
              {"compat_531", verdict_json(report.compat_531)},
              {"compat_532", verdict_json(report.compat_532)},
              {"accepted", report.accepted()}};
}

json to_json(const AdmissibilityReport& report) {
  auto verdict = [](const AdmissibilityVerdict& v) {
    return json{{"pass", v.pass}, {"witnesses", v.witnesses}};
  };
  json proper = verdict(report.proper);
  proper["r0_fiber_sizes"] = report.r0_fiber_sizes;
  proper["r1_fiber_sizes"] = report.r1_fiber_sizes;
  return json{{"vertex_disjoint", verdict(report.vertex_disjoint)},
              {"source_bijective", verdict(report.source_bijective)},
              {"monotone", verdict(report.monotone)},
              {"proper", std::move(proper)},
              {"regular", verdict(report.regular)},
              {"admissible", report.admissible()}};
}

json to_json(const RelationValidation& report) {
  return json{{"valid", report.valid}, {"violations", report.violations}};
}

json to_json(const InverseReport& report) {
  return json{{"inverse", report.inverse},
              {"left_composite_matches", report.left_composite_matches},
              {"right_composite_matches", report.right_composite_matches}};
}

std::string dump_canonical(const json& j) {
  return j.dump(2) + "\n";
}

} // namespace bpg
