#include "bpg/oracle.hpp"

#include <algorithm>

namespace bpg {

bool operator==(const GroupoidArrow& a, const GroupoidArrow& b) {
  return a.offset == b.offset && a.range_path == b.range_path &&
         a.source_path == b.source_path;
}

bool arrow_less(const GroupoidArrow& a, const GroupoidArrow& b) {
  if (!(a.range_path == b.range_path))
    return path_less(a.range_path, b.range_path);
  if (a.offset != b.offset)
    return a.offset < b.offset;
  return path_less(a.source_path, b.source_path);
}

std::vector<Path> boundary_paths(const GraphPtr& g) {
  if (!g->is_acyclic())
    throw CyclicGraphError("oracle requires an acyclic graph");
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (int v : g->vertices_in_order())
    frontier.push_back(Path::at_vertex(g, v));
  while (!frontier.empty()) {
    Path p = frontier.back();
    frontier.pop_back();
    if (!g->is_regular(p.source_vertex())) {
      out.push_back(p);
      continue;
    }
    for (int e : g->edges_into(p.source_vertex()))
      frontier.push_back(p.extend(e));
  }
  std::sort(out.begin(), out.end(), PathLess{});
  return out;
}

std::vector<GroupoidArrow> materialize_groupoid(const GraphPtr& g) {
  const auto boundary = boundary_paths(g);
  std::vector<GroupoidArrow> arrows;
  for (const auto& z : boundary)
    for (const auto& zp : boundary)
      if (z.source_vertex() == zp.source_vertex())
        arrows.push_back({z, z.length() - zp.length(), zp});
  std::sort(arrows.begin(), arrows.end(), ArrowLess{});
  return arrows;
}

PathSet eval_cylinder(const CylinderSet& s) {
  PathSet out;
  for (const auto& z : boundary_paths(s.graph()))
    for (const auto& x : s.generators())
      if (is_prefix(x, z)) {
        out.insert(z);
        break;
      }
  return out;
}

ArrowSet eval_bisection(const Bisection& b) {
  ArrowSet out;
  const auto boundary = boundary_paths(b.graph());
  for (const auto& [x, y] : b.generators()) {
    const int k = x.length() - y.length();
    for (const auto& w : boundary)
      if (w.range_vertex() == x.source_vertex())
        out.insert({concat(x, w), k, concat(y, w)});
  }
  return out;
}

PathSet set_union(const PathSet& a, const PathSet& b) {
  PathSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

PathSet set_difference(const PathSet& a, const PathSet& b) {
  PathSet out;
  for (const auto& z : a)
    if (!b.count(z))
      out.insert(z);
  return out;
}

PathSet set_intersection(const PathSet& a, const PathSet& b) {
  PathSet out;
  for (const auto& z : a)
    if (b.count(z))
      out.insert(z);
  return out;
}

ArrowSet arrow_product(const ArrowSet& a, const ArrowSet& b) {
  ArrowSet out;
  for (const auto& g : a)
    for (const auto& h : b)
      if (g.source_path == h.range_path)
        out.insert({g.range_path, g.offset + h.offset, h.source_path});
  return out;
}

ArrowSet arrow_inverse(const ArrowSet& a) {
  ArrowSet out;
  for (const auto& g : a)
    out.insert({g.source_path, -g.offset, g.range_path});
  return out;
}

ArrowSet arrow_union(const ArrowSet& a, const ArrowSet& b) {
  ArrowSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

PathSet arrow_range(const ArrowSet& a) {
  PathSet out;
  for (const auto& g : a)
    out.insert(g.range_path);
  return out;
}

PathSet arrow_source(const ArrowSet& a) {
  PathSet out;
  for (const auto& g : a)
    out.insert(g.source_path);
  return out;
}

bool oracle_equal(const CylinderSet& symbolic, const PathSet& setwise) {
  return eval_cylinder(symbolic) == setwise;
}

bool oracle_equal(const Bisection& symbolic, const ArrowSet& setwise) {
  return eval_bisection(symbolic) == setwise;
}

} // namespace bpg
