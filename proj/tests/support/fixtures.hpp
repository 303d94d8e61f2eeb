#ifndef BPG_TESTS_FIXTURES_HPP
#define BPG_TESTS_FIXTURES_HPP

#include "bpg/actor.hpp"
#include "bpg/family.hpp"
#include "bpg/graph.hpp"
#include "bpg/relation.hpp"

namespace bpg::tests {

// gamma1: u1 --e1--> u2 --e2--> u3, with s(ei) = ui, r(ei) = u(i+1).
// Its boundary path space is {u1, e1, e2.e1}.
inline GraphPtr gamma1() {
  return DirectedGraph::make({"gamma1",
                              {"u1", "u2", "u3"},
                              {{"e1", "u1", "u2"}, {"e2", "u2", "u3"}}});
}

// gamma2: two parallel edges f1, f2 from v1 to v2.
// Its boundary path space is {v1, f1, f2}.
inline GraphPtr gamma2() {
  return DirectedGraph::make(
      {"gamma2", {"v1", "v2"}, {{"f1", "v1", "v2"}, {"f2", "v1", "v2"}}});
}

inline Path vpath(const GraphPtr& g, const std::string& v) {
  return Path::at_vertex(g, v);
}

inline Path epath(const GraphPtr& g, const std::vector<std::string>& edges) {
  return Path::from_edge_ids(g, edges);
}

inline CylinderSet cyl(const GraphPtr& g, const std::vector<Path>& gens) {
  return CylinderSet::canonicalize(g, gens);
}

// The relation of the worked example:
// {(u1,v1),(u2,v2),(u3,v2),(e2.e1,f2),(e1,f1)} from gamma1 to gamma2.
inline RelationMorphism example_relation(const GraphPtr& g1, const GraphPtr& g2) {
  RelationMorphism r;
  r.source_graph = g1;
  r.target_graph = g2;
  r.r0 = {{"u1", "v1"}, {"u2", "v2"}, {"u3", "v2"}};
  r.r1 = {{epath(g1, {"e2", "e1"}), "f2"}, {epath(g1, {"e1"}), "f1"}};
  r.normalize();
  return r;
}

// The induced gamma2-family in the groupoid of gamma1:
// omega[v1] = Z_{u1}, omega[v2] = Z_{u2} + Z_{u3},
// t[f1] = Z(e1, u1), t[f2] = Z(e2.e1, u1).
inline DckFamily forward_family(const GraphPtr& g1, const GraphPtr& g2) {
  DckFamily f;
  f.source_graph = g2;
  f.ambient_graph = g1;
  f.omega.emplace("v1", cyl(g1, {vpath(g1, "u1")}));
  f.omega.emplace("v2", cyl(g1, {vpath(g1, "u2"), vpath(g1, "u3")}));
  f.t.emplace("f1", Bisection::basic(epath(g1, {"e1"}), vpath(g1, "u1")));
  f.t.emplace("f2", Bisection::basic(epath(g1, {"e2", "e1"}), vpath(g1, "u1")));
  return f;
}

// The inverse gamma1-family in the groupoid of gamma2:
// omega[u1] = Z_{v1}, omega[u2] = Z_{f1}, omega[u3] = Z_{f2},
// t[e1] = Z(f1, v1), t[e2] = Z(f2, f1).
inline DckFamily inverse_family(const GraphPtr& g1, const GraphPtr& g2) {
  DckFamily f;
  f.source_graph = g1;
  f.ambient_graph = g2;
  f.omega.emplace("u1", cyl(g2, {vpath(g2, "v1")}));
  f.omega.emplace("u2", cyl(g2, {epath(g2, {"f1"})}));
  f.omega.emplace("u3", cyl(g2, {epath(g2, {"f2"})}));
  f.t.emplace("e1", Bisection::basic(epath(g2, {"f1"}), vpath(g2, "v1")));
  f.t.emplace("e2", Bisection::basic(epath(g2, {"f2"}), epath(g2, {"f1"})));
  return f;
}

} // namespace bpg::tests

#endif // BPG_TESTS_FIXTURES_HPP
