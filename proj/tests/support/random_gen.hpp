#ifndef BPG_TESTS_RANDOM_GEN_HPP
#define BPG_TESTS_RANDOM_GEN_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bpg/bisection.hpp"
#include "bpg/cylinder.hpp"
#include "bpg/graph.hpp"
#include "bpg/random.hpp"
#include "bpg/relation.hpp"

namespace bpg::tests {

using bpg::Rng;
using bpg::chance;
using bpg::pick;
using bpg::random_bisection;
using bpg::random_cylinder;
using bpg::random_graph;
using bpg::random_path;

/// Random relation morphism candidate, for rejection sampling: r0 maps a
/// random subset of the source vertices into the target, and each target
/// edge receives one random preimage path per source fiber vertex when one
/// exists. The result validates by construction but admissibility must be
/// checked by the caller.
inline std::optional<RelationMorphism> random_relation_candidate(
    Rng& rng, const GraphPtr& g1, const GraphPtr& g2, int max_path_len) {
  RelationMorphism r;
  r.source_graph = g1;
  r.target_graph = g2;

  // vertex-disjoint partial map V1 -> V2
  std::vector<int> image(g1->vertex_count(), -1);
  for (int u = 0; u < g1->vertex_count(); ++u)
    if (chance(rng, 0.8))
      image[u] = pick(rng, 0, g2->vertex_count() - 1);
  for (int u = 0; u < g1->vertex_count(); ++u)
    if (image[u] >= 0)
      r.r0.emplace_back(g1->vertex_id(u), g2->vertex_id(image[u]));

  // enumerate paths from u whose range lands in the fiber of a vertex
  auto candidate_paths = [&](int u, int target_v) {
    std::vector<Path> out;
    std::vector<Path> frontier{Path::at_vertex(g1, u)};
    while (!frontier.empty()) {
      Path p = frontier.back();
      frontier.pop_back();
      if (p.length() >= 1 && image[p.range_vertex()] == target_v)
        out.push_back(p);
      if (p.length() < max_path_len)
        for (int e : g1->edges_out_of(p.range_vertex())) {
          // grow at the range end, keeping the source at u
          std::vector<int> edges{e};
          edges.insert(edges.end(), p.edges().begin(), p.edges().end());
          frontier.push_back(Path::from_edges(g1, std::move(edges)));
        }
    }
    std::sort(out.begin(), out.end(), PathLess{});
    return out;
  };

  for (int fe = 0; fe < g2->edge_count(); ++fe) {
    const int sv = g2->src(fe);
    const int rv = g2->rng(fe);
    for (int u = 0; u < g1->vertex_count(); ++u) {
      if (image[u] != sv)
        continue;
      const auto candidates = candidate_paths(u, rv);
      if (candidates.empty())
        return std::nullopt; // source bijectivity is unreachable
      r.r1.emplace_back(candidates[pick(rng, 0, static_cast<int>(candidates.size()) - 1)],
                        g2->edge_id(fe));
    }
  }
  r.normalize();
  return r;
}

/// Admissible nondegenerate relation built as a quotient: label the source
/// vertices, make one target edge per decomposition class, and route every
/// source edge into exactly one class. Returns the relation together with
/// the constructed target graph, or nothing when the labelling is not
/// compatible (uneven out-degrees into a fiber, or a singular vertex in a
/// regular fiber).
struct QuotientRelation {
  GraphPtr target;
  RelationMorphism relation;
};

inline std::optional<QuotientRelation> random_quotient_relation(
    Rng& rng, const GraphPtr& g1, const std::string& target_name) {
  const int nv = g1->vertex_count();
  const int nlabels = pick(rng, 1, nv);
  std::vector<int> label(nv);
  for (int u = 0; u < nv; ++u)
    label[u] = pick(rng, 0, nlabels - 1);

  // count edges from u into each label
  std::vector<std::vector<std::vector<int>>> edges_into_label(
      nlabels, std::vector<std::vector<int>>(nv));
  for (int e = 0; e < g1->edge_count(); ++e)
    edges_into_label[label[g1->rng(e)]][g1->src(e)].push_back(e);

  // per label pair (a, b): every vertex with label a must send the same
  // number of edges into the fiber of b
  std::vector<std::vector<int>> multiplicity(nlabels, std::vector<int>(nlabels, 0));
  for (int a = 0; a < nlabels; ++a)
    for (int b = 0; b < nlabels; ++b) {
      int count = -1;
      for (int u = 0; u < nv; ++u) {
        if (label[u] != a)
          continue;
        const int c = static_cast<int>(edges_into_label[b][u].size());
        if (count < 0)
          count = c;
        else if (count != c)
          return std::nullopt;
      }
      multiplicity[a][b] = count < 0 ? 0 : count;
    }

  // a vertex in a regular fiber must itself be regular
  for (int b = 0; b < nlabels; ++b) {
    bool fiber_regular = false;
    for (int a = 0; a < nlabels; ++a)
      if (multiplicity[a][b] > 0)
        fiber_regular = true;
    if (!fiber_regular)
      continue;
    for (int u = 0; u < nv; ++u)
      if (label[u] == b && !g1->is_regular(u))
        return std::nullopt;
  }

  GraphData data;
  data.name = target_name;
  for (int a = 0; a < nlabels; ++a)
    data.vertices.push_back(target_name + "v" + std::to_string(a));

  RelationMorphism r;
  r.source_graph = g1;
  for (int u = 0; u < nv; ++u)
    r.r0.emplace_back(g1->vertex_id(u), data.vertices[label[u]]);

  // one target edge per (a,b)-class slot; source edges are dealt round-robin
  std::vector<std::pair<std::vector<int>, std::string>> pending; // (edges, id)
  int edge_counter = 0;
  for (int a = 0; a < nlabels; ++a)
    for (int b = 0; b < nlabels; ++b) {
      const int k = multiplicity[a][b];
      for (int slot = 0; slot < k; ++slot) {
        const std::string id = target_name + "e" + std::to_string(edge_counter++);
        data.edges.push_back({id, data.vertices[a], data.vertices[b]});
        std::vector<int> chosen;
        for (int u = 0; u < nv; ++u) {
          if (label[u] != a)
            continue;
          chosen.push_back(edges_into_label[b][u][slot]);
        }
        pending.emplace_back(std::move(chosen), id);
      }
    }

  auto target = DirectedGraph::make(std::move(data));
  r.target_graph = target;
  for (const auto& [edges, id] : pending)
    for (int e : edges)
      r.r1.emplace_back(Path::from_edges(g1, {e}), id);
  r.normalize();
  return QuotientRelation{target, std::move(r)};
}

} // namespace bpg::tests

#endif // BPG_TESTS_RANDOM_GEN_HPP
