#include "bpg/relation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bpg {

namespace {

bool r0_less(const std::pair<std::string, std::string>& a,
             const std::pair<std::string, std::string>& b) {
  if (a.first != b.first)
    return shortlex_less(a.first, b.first);
  return shortlex_less(a.second, b.second);
}

bool r1_less(const std::pair<Path, std::string>& a,
             const std::pair<Path, std::string>& b) {
  if (!(a.first == b.first))
    return path_less(a.first, b.first);
  return shortlex_less(a.second, b.second);
}

} // namespace

void RelationMorphism::normalize() {
  std::sort(r0.begin(), r0.end(), r0_less);
  r0.erase(std::unique(r0.begin(), r0.end()), r0.end());
  std::sort(r1.begin(), r1.end(), r1_less);
  r1.erase(std::unique(r1.begin(), r1.end(),
                       [](const auto& a, const auto& b) {
                         return a.first == b.first && a.second == b.second;
                       }),
           r1.end());
}

bool operator==(const RelationMorphism& a, const RelationMorphism& b) {
  if (!same_graph(a.source_graph, b.source_graph) ||
      !same_graph(a.target_graph, b.target_graph) || a.r0 != b.r0 ||
      a.r1.size() != b.r1.size())
    return false;
  for (size_t i = 0; i < a.r1.size(); ++i)
    if (!(a.r1[i].first == b.r1[i].first) || a.r1[i].second != b.r1[i].second)
      return false;
  return true;
}

RelationValidation validate_relation(const RelationMorphism& r) {
  RelationValidation report;
  auto fail = [&](const std::string& msg) {
    report.valid = false;
    report.violations.push_back(msg);
  };

  std::set<std::pair<std::string, std::string>> r0_set(r.r0.begin(), r.r0.end());
  for (const auto& [u, v] : r.r0) {
    if (r.source_graph->vertex_index(u) < 0)
      fail("r0 pair (" + u + "," + v + "): unknown source vertex " + u);
    if (r.target_graph->vertex_index(v) < 0)
      fail("r0 pair (" + u + "," + v + "): unknown target vertex " + v);
  }
  for (const auto& [x, f] : r.r1) {
    if (!same_graph(x.graph(), r.source_graph)) {
      fail("r1 pair (" + to_string(x) + "," + f + "): path not over the source graph");
      continue;
    }
    const int fe = r.target_graph->edge_index(f);
    if (fe < 0) {
      fail("r1 pair (" + to_string(x) + "," + f + "): unknown target edge " + f);
      continue;
    }
    const auto& src_u = r.source_graph->vertex_id(x.source_vertex());
    const auto& src_v = r.target_graph->vertex_id(r.target_graph->src(fe));
    if (!r0_set.count({src_u, src_v}))
      fail("r1 pair (" + to_string(x) + "," + f + "): not source preserving, (" +
           src_u + "," + src_v + ") missing from r0");
    const auto& rng_u = r.source_graph->vertex_id(x.range_vertex());
    const auto& rng_v = r.target_graph->vertex_id(r.target_graph->rng(fe));
    if (!r0_set.count({rng_u, rng_v}))
      fail("r1 pair (" + to_string(x) + "," + f + "): not range preserving, (" +
           rng_u + "," + rng_v + ") missing from r0");
  }
  return report;
}

namespace {

// R^{-1}(v) over r0, in canonical order.
std::vector<std::string> r0_fiber(const RelationMorphism& r, const std::string& v) {
  std::vector<std::string> out;
  for (const auto& [u, w] : r.r0)
    if (w == v)
      out.push_back(u);
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

// R^{-1}(f) over r1, in canonical order.
std::vector<Path> r1_fiber(const RelationMorphism& r, const std::string& f) {
  std::vector<Path> out;
  for (const auto& [x, g] : r.r1)
    if (g == f)
      out.push_back(x);
  std::sort(out.begin(), out.end(), PathLess{});
  return out;
}

CylinderSet omega_of(const RelationMorphism& r, const std::string& v) {
  std::vector<Path> gens;
  for (const auto& u : r0_fiber(r, v))
    gens.push_back(Path::at_vertex(r.source_graph, u));
  return CylinderSet::canonicalize(r.source_graph, std::move(gens));
}

} // namespace

AdmissibilityReport check_admissible(const RelationMorphism& r) {
  AdmissibilityReport report;
  const auto& sg = *r.source_graph;
  const auto& tg = *r.target_graph;

  // vertex disjoint: no source vertex relates to two target vertices
  std::map<std::string, std::vector<std::string>> images;
  for (const auto& [u, v] : r.r0)
    images[u].push_back(v);
  for (auto& [u, vs] : images) {
    std::sort(vs.begin(), vs.end(), shortlex_less);
    if (vs.size() > 1) {
      report.vertex_disjoint.pass = false;
      std::string msg = u + " lies in the preimage of";
      for (const auto& v : vs)
        msg += " " + v;
      report.vertex_disjoint.witnesses.push_back(msg);
    }
  }

  // source bijective: s restricts to a bijection R^{-1}(f) -> R^{-1}(s(f))
  for (int fe : tg.edges_in_order()) {
    const auto& f = tg.edge_id(fe);
    const auto fiber = r1_fiber(r, f);
    const auto target_fiber = r0_fiber(r, tg.vertex_id(tg.src(fe)));
    std::vector<std::string> sources;
    for (const auto& x : fiber)
      sources.push_back(sg.vertex_id(x.source_vertex()));
    std::sort(sources.begin(), sources.end(), shortlex_less);
    for (size_t i = 0; i + 1 < sources.size(); ++i)
      if (sources[i] == sources[i + 1]) {
        report.source_bijective.pass = false;
        report.source_bijective.witnesses.push_back(
            f + ": two preimages share the source " + sources[i]);
      }
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
    if (sources != target_fiber) {
      report.source_bijective.pass = false;
      report.source_bijective.witnesses.push_back(
          f + ": preimage sources do not match the fiber of " +
          tg.vertex_id(tg.src(fe)));
    }
  }

  // monotone: comparable paths in r1 only occur as the identical pair
  for (size_t i = 0; i < r.r1.size(); ++i)
    for (size_t j = 0; j < r.r1.size(); ++j) {
      if (i == j)
        continue;
      const auto& [x, f] = r.r1[i];
      const auto& [xp, fp] = r.r1[j];
      if (is_prefix(x, xp) && !(x == xp && f == fp)) {
        report.monotone.pass = false;
        report.monotone.witnesses.push_back("(" + to_string(x) + "," + f + ") vs (" +
                                            to_string(xp) + "," + fp + ")");
      }
    }

  // proper: automatic for a finite presentation; record the fiber sizes
  for (int v : tg.vertices_in_order())
    report.r0_fiber_sizes[tg.vertex_id(v)] =
        static_cast<int>(r0_fiber(r, tg.vertex_id(v)).size());
  for (int fe : tg.edges_in_order())
    report.r1_fiber_sizes[tg.edge_id(fe)] =
        static_cast<int>(r1_fiber(r, tg.edge_id(fe)).size());

  // regular: for every regular target vertex, the ranges of the induced
  // t[f] with rng(f) = v cover omega[v]. Only the range cylinders are
  // needed, so this stays well defined even when the other conditions fail.
  for (int v : tg.regular_vertices()) {
    const auto& vid = tg.vertex_id(v);
    const auto omega = omega_of(r, vid);
    std::vector<Path> cover_gens;
    for (int fe : tg.edges_into(v))
      for (const auto& x : r1_fiber(r, tg.edge_id(fe)))
        cover_gens.push_back(x);
    const auto cover = CylinderSet::canonicalize(r.source_graph, std::move(cover_gens));
    if (!omega.subset_of(cover)) {
      report.regular.pass = false;
      report.regular.witnesses.push_back(
          vid + ": omega " + to_string(omega) + " not covered by " + to_string(cover));
    }
  }

  return report;
}

DckFamily relation_to_family(const RelationMorphism& r) {
  const auto validation = validate_relation(r);
  if (!validation.valid) {
    std::ostringstream msg;
    msg << "relation is not a relation morphism:";
    for (const auto& v : validation.violations)
      msg << " " << v << ";";
    throw PreconditionError(msg.str(), "relation_morphism");
  }
  const auto adm = check_admissible(r);
  if (!adm.admissible()) {
    std::string condition = !adm.vertex_disjoint.pass ? "vertex_disjoint"
                            : !adm.source_bijective.pass
                                ? "source_bijective"
                                : !adm.monotone.pass ? "monotone"
                                  : !adm.proper.pass ? "proper"
                                                     : "regular";
    throw PreconditionError("relation is not admissible: " + condition + " fails",
                            condition);
  }

  DckFamily family;
  family.source_graph = r.target_graph;
  family.ambient_graph = r.source_graph;
  for (int v : r.target_graph->vertices_in_order()) {
    const auto& vid = r.target_graph->vertex_id(v);
    family.omega.emplace(vid, omega_of(r, vid));
  }
  for (int fe : r.target_graph->edges_in_order()) {
    const auto& f = r.target_graph->edge_id(fe);
    auto te = Bisection::empty(r.source_graph);
    for (const auto& x : r1_fiber(r, f)) {
      const Path sx = Path::at_vertex(r.source_graph, x.source_vertex());
      te = te.union_with(Bisection::basic(x, sx));
    }
    family.t.emplace(f, std::move(te));
  }
  return family;
}

RelationMorphism family_to_relation(const DckFamily& f) {
  const auto report = verify_family(f);
  if (!report.accepted())
    throw PreconditionError("family fails the Cuntz-Krieger conditions", "dck");
  if (!report.compat_531.pass) {
    const auto& w = report.compat_531.failures.front();
    throw CompatibilityError("condition (5.3.1) fails at (" + w.ambient_vertex + "," +
                                 w.source_vertex + "): Z_" + w.ambient_vertex +
                                 " . omega[" + w.source_vertex + "] = " +
                                 to_string(w.computed) + " is neither empty nor Z_" +
                                 w.ambient_vertex,
                             "5.3.1", w);
  }
  if (!report.compat_532.pass) {
    const auto& w = report.compat_532.failures.front();
    throw CompatibilityError("condition (5.3.2) fails at (" + w.edge + "," +
                                 w.ambient_vertex + "): t[" + w.edge + "] . Z_" +
                                 w.ambient_vertex + " = " + to_string(w.computed) +
                                 " is not of the form Z(x, s(x))",
                             "5.3.2", w);
  }

  RelationMorphism r;
  r.source_graph = f.ambient_graph;
  r.target_graph = f.source_graph;
  for (int u : f.ambient_graph->vertices_in_order()) {
    const auto zu = CylinderSet::basic(Path::at_vertex(f.ambient_graph, u));
    for (int v : f.source_graph->vertices_in_order()) {
      const auto& vid = f.source_graph->vertex_id(v);
      if (zu.subset_of(f.omega.at(vid)))
        r.r0.emplace_back(f.ambient_graph->vertex_id(u), vid);
    }
  }
  for (int fe : f.source_graph->edges_in_order()) {
    const auto& fid = f.source_graph->edge_id(fe);
    for (int u : f.ambient_graph->vertices_in_order()) {
      const auto zu = CylinderSet::basic(Path::at_vertex(f.ambient_graph, u));
      const auto prod = f.t.at(fid).product(embed_identity(zu));
      if (prod.is_empty())
        continue;
      // (5.3.2) guarantees a single generator (x, u); read off x
      r.r1.emplace_back(prod.generators()[0].first, fid);
    }
  }
  r.normalize();
  return r;
}

} // namespace bpg
