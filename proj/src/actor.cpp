#include "bpg/actor.hpp"

#include <algorithm>
#include <functional>

namespace bpg {

Bisection Theta::path_image(const Path& x) const {
  if (!same_graph(x.graph(), family_.source_graph))
    throw GraphMismatchError("theta applied to a path outside the source graph");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(x);
    if (it != memo_.end())
      return it->second;
  }
  Bisection result = Bisection::empty(family_.ambient_graph);
  if (x.is_vertex()) {
    result = embed_identity(family_.omega.at(x.graph()->vertex_id(x.vertex())));
  } else if (x.length() == 1) {
    result = family_.t.at(x.graph()->edge_id(x.edge(0)));
  } else {
    result = path_image(x.prefix(x.length() - 1))
                 .product(path_image(x.suffix_after(x.length() - 1)));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(x, std::move(result)).first->second;
}

CylinderSet Theta::map_cylinder(const CylinderSet& s) const {
  if (!same_graph(s.graph(), family_.source_graph))
    throw GraphMismatchError("theta applied to a cylinder outside the source graph");
  auto out = CylinderSet::empty(family_.ambient_graph);
  for (const auto& x : s.generators())
    out = out.union_with(path_image(x).range_set());
  return out;
}

Bisection Theta::map_bisection(const Bisection& b) const {
  if (!same_graph(b.graph(), family_.source_graph))
    throw GraphMismatchError("theta applied to a bisection outside the source graph");
  auto out = Bisection::empty(family_.ambient_graph);
  for (const auto& [x, y] : b.generators())
    out = out.union_with(path_image(x).product(path_image(y).inverse()));
  return out;
}

DckFamily identity_family(GraphPtr g) {
  DckFamily family;
  family.source_graph = g;
  family.ambient_graph = g;
  for (int v : g->vertices_in_order())
    family.omega.emplace(g->vertex_id(v),
                         CylinderSet::basic(Path::at_vertex(g, v)));
  for (int e : g->edges_in_order()) {
    const Path edge_path = Path::from_edges(g, {e});
    const Path src_path = Path::at_vertex(g, g->src(e));
    family.t.emplace(g->edge_id(e), Bisection::basic(edge_path, src_path));
  }
  return family;
}

DckFamily compose_families(const DckFamily& f, const DckFamily& g) {
  if (!same_graph(f.ambient_graph, g.source_graph))
    throw GraphMismatchError(
        "cannot compose: ambient graph of the inner family differs from the "
        "source graph of the outer family");
  const auto f_report = verify_family(f);
  if (!f_report.accepted() || !f_report.nondegenerate)
    throw PreconditionError("inner family is not a nondegenerate family", "compose");
  const auto g_report = verify_family(g);
  if (!g_report.accepted() || !g_report.nondegenerate)
    throw PreconditionError("outer family is not a nondegenerate family", "compose");

  const Theta theta(g);
  DckFamily out;
  out.source_graph = f.source_graph;
  out.ambient_graph = g.ambient_graph;
  for (const auto& [v, omega] : f.omega)
    out.omega.emplace(v, theta.map_cylinder(omega));
  for (const auto& [e, te] : f.t)
    out.t.emplace(e, theta.map_bisection(te));

  // The actor category guarantees the composite verifies; a failure here
  // is an implementation bug and must be loud.
  const auto report = verify_family(out);
  if (!report.accepted() || !report.nondegenerate)
    throw Error("composite family failed re-verification");
  return out;
}

InverseReport verify_inverse(const DckFamily& f, const DckFamily& g) {
  InverseReport report;
  const bool composable = same_graph(f.ambient_graph, g.source_graph) &&
                          same_graph(g.ambient_graph, f.source_graph);
  if (!composable)
    return report;
  report.left_composite_matches =
      compose_families(g, f) == identity_family(g.source_graph);
  report.right_composite_matches =
      compose_families(f, g) == identity_family(f.source_graph);
  report.inverse = report.left_composite_matches && report.right_composite_matches;
  return report;
}

namespace {

// Enumeration state for one candidate inverse family. omega pieces are
// assembled from the depth-bounded atom antichain of the ambient graph, so
// every family whose generators stay within the length bound is reachable.
struct InverseSearch {
  const DckFamily* f = nullptr;
  GraphPtr source;  // candidate source graph  (= ambient of f)
  GraphPtr ambient; // candidate ambient graph (= source of f)
  int max_len = 0;
  std::vector<Path> atoms;
  std::vector<Path> pieces; // candidate generator paths, canonical order

  std::optional<DckFamily> run();

private:
  std::map<std::string, CylinderSet> omega_;
  std::map<std::string, Bisection> t_;

  std::optional<DckFamily> enumerate_omega(size_t atom_index,
                                           std::vector<int>& assignment);
  std::optional<DckFamily> enumerate_edges(size_t edge_pos, CylinderSet used_ranges);
  std::optional<DckFamily> enumerate_decomposition(
      size_t edge_pos, const std::string& edge_id, const CylinderSet& omega_src,
      const CylinderSet& omega_rng, std::vector<Path> remaining_atoms,
      std::vector<BisectionPair> chosen, CylinderSet used_ranges);
  std::optional<DckFamily> finish();
};

std::optional<DckFamily> InverseSearch::run() {
  std::vector<int> assignment(atoms.size(), 0);
  return enumerate_omega(0, assignment);
}

std::optional<DckFamily> InverseSearch::enumerate_omega(size_t atom_index,
                                                        std::vector<int>& assignment) {
  const auto& vertices = source->vertices_in_order();
  if (atom_index == atoms.size()) {
    omega_.clear();
    std::map<std::string, std::vector<Path>> buckets;
    for (int v : vertices)
      buckets[source->vertex_id(v)] = {};
    for (size_t i = 0; i < atoms.size(); ++i)
      buckets[source->vertex_id(vertices[assignment[i]])].push_back(atoms[i]);
    for (auto& [v, gens] : buckets)
      omega_.emplace(v, CylinderSet::canonicalize(ambient, std::move(gens)));
    t_.clear();
    return enumerate_edges(0, CylinderSet::empty(ambient));
  }
  for (size_t choice = 0; choice < vertices.size(); ++choice) {
    assignment[atom_index] = static_cast<int>(choice);
    if (auto hit = enumerate_omega(atom_index + 1, assignment))
      return hit;
  }
  return std::nullopt;
}

std::optional<DckFamily> InverseSearch::enumerate_edges(size_t edge_pos,
                                                        CylinderSet used_ranges) {
  const auto& edges = source->edges_in_order();
  if (edge_pos == edges.size())
    return finish();
  const int e = edges[edge_pos];
  const auto& edge_id = source->edge_id(e);
  const auto& omega_src = omega_.at(source->vertex_id(source->src(e)));
  const auto& omega_rng = omega_.at(source->vertex_id(source->rng(e)));

  // atoms of omega_src, to be exactly covered by the source components
  std::vector<Path> remaining;
  for (const auto& a : atoms)
    for (const auto& g : omega_src.generators())
      if (is_prefix(g, a)) {
        remaining.push_back(a);
        break;
      }
  return enumerate_decomposition(edge_pos, edge_id, omega_src, omega_rng,
                                 std::move(remaining), {}, std::move(used_ranges));
}

std::optional<DckFamily> InverseSearch::enumerate_decomposition(
    size_t edge_pos, const std::string& edge_id, const CylinderSet& omega_src,
    const CylinderSet& omega_rng, std::vector<Path> remaining_atoms,
    std::vector<BisectionPair> chosen, CylinderSet used_ranges) {
  if (remaining_atoms.empty()) {
    Bisection te = Bisection::empty(ambient);
    try {
      te = Bisection::canonicalize(ambient, chosen);
    } catch (const NotABisectionError&) {
      return std::nullopt;
    }
    t_.emplace(edge_id, te);
    auto hit = enumerate_edges(edge_pos + 1, used_ranges.union_with(te.range_set()));
    if (hit)
      return hit;
    t_.erase(edge_id);
    return std::nullopt;
  }

  const Path first = remaining_atoms.front();
  for (const auto& y : pieces) {
    if (!is_prefix(y, first) ||
        !CylinderSet::basic(y).subset_of(omega_src))
      continue;
    // y absorbs every remaining atom below it
    std::vector<Path> rest;
    for (const auto& a : remaining_atoms)
      if (!is_prefix(y, a))
        rest.push_back(a);
    for (const auto& x : pieces) {
      if (x.source_vertex() != y.source_vertex())
        continue;
      const auto zx = CylinderSet::basic(x);
      if (!zx.subset_of(omega_rng))
        continue;
      if (!zx.intersection(used_ranges).is_empty())
        continue; // ranges of distinct t[e] must stay disjoint
      bool clashes = false;
      for (const auto& [cx, cy] : chosen)
        if (comparable(cx, x) || comparable(cy, y)) {
          clashes = true;
          break;
        }
      if (clashes)
        continue;
      auto next = chosen;
      next.emplace_back(x, y);
      if (auto hit = enumerate_decomposition(edge_pos, edge_id, omega_src, omega_rng,
                                             rest, std::move(next), used_ranges))
        return hit;
    }
  }
  return std::nullopt;
}

std::optional<DckFamily> InverseSearch::finish() {
  DckFamily candidate;
  candidate.source_graph = source;
  candidate.ambient_graph = ambient;
  candidate.omega = omega_;
  candidate.t = t_;
  const auto report = verify_family(candidate);
  if (!report.accepted() || !report.nondegenerate)
    return std::nullopt;
  if (!verify_inverse(*f, candidate).inverse)
    return std::nullopt;
  return candidate;
}

} // namespace

std::optional<DckFamily> search_inverse(const DckFamily& f, int max_len) {
  if (max_len < 1)
    throw PreconditionError("max_len must be positive", "max_len");
  const auto report = verify_family(f);
  if (!report.accepted() || !report.nondegenerate)
    throw PreconditionError("search_inverse requires a verified nondegenerate family",
                            "search_inverse");

  InverseSearch search;
  search.f = &f;
  search.source = f.ambient_graph;
  search.ambient = f.source_graph;
  search.max_len = max_len;
  search.atoms = atom_antichain(search.ambient, max_len);

  // all candidate generator paths of bounded length, canonical order
  std::vector<Path> frontier;
  for (int v : search.ambient->vertices_in_order())
    frontier.push_back(Path::at_vertex(search.ambient, v));
  while (!frontier.empty()) {
    Path p = frontier.back();
    frontier.pop_back();
    search.pieces.push_back(p);
    if (p.length() >= max_len)
      continue;
    for (int e : search.ambient->edges_into(p.source_vertex()))
      frontier.push_back(p.extend(e));
  }
  std::sort(search.pieces.begin(), search.pieces.end(), PathLess{});

  return search.run();
}

} // namespace bpg
