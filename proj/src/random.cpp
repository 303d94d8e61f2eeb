#include "bpg/random.hpp"

#include "bpg/oracle.hpp"

namespace bpg {

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

GraphPtr random_graph(Rng& rng, int max_v, int max_e, bool acyclic,
                      const std::string& name) {
  const int nv = pick(rng, 1, max_v);
  const int ne = pick(rng, 0, max_e);
  GraphData data;
  data.name = name;
  for (int v = 0; v < nv; ++v)
    data.vertices.push_back(name + "v" + std::to_string(v));
  for (int e = 0; e < ne; ++e) {
    int a = pick(rng, 0, nv - 1);
    int b = pick(rng, 0, nv - 1);
    if (acyclic) {
      if (a == b)
        continue; // no loops in the acyclic case
      if (a > b)
        std::swap(a, b); // edges point from lower to higher index
    }
    data.edges.push_back(
        {name + "e" + std::to_string(e), data.vertices[a], data.vertices[b]});
  }
  return DirectedGraph::make(std::move(data));
}

Path random_path(Rng& rng, const GraphPtr& g, int max_len) {
  Path p = Path::at_vertex(g, pick(rng, 0, g->vertex_count() - 1));
  const int len = pick(rng, 0, max_len);
  for (int i = 0; i < len; ++i) {
    const auto& exts = g->edges_into(p.source_vertex());
    if (exts.empty())
      break;
    p = p.extend(exts[pick(rng, 0, static_cast<int>(exts.size()) - 1)]);
  }
  return p;
}

CylinderSet random_cylinder(Rng& rng, const GraphPtr& g, int max_gens, int max_len) {
  std::vector<Path> gens;
  const int n = pick(rng, 0, max_gens);
  for (int i = 0; i < n; ++i)
    gens.push_back(random_path(rng, g, max_len));
  return CylinderSet::canonicalize(g, std::move(gens));
}

Bisection random_bisection(Rng& rng, const GraphPtr& g, int max_gens, int max_len) {
  Bisection out = Bisection::empty(g);
  const int n = pick(rng, 0, max_gens);
  for (int i = 0; i < n; ++i) {
    const Path y = random_path(rng, g, max_len);
    // grow x from the shared source vertex at the range end
    Path x = Path::at_vertex(g, y.source_vertex());
    const int len = pick(rng, 0, max_len);
    for (int k = 0; k < len; ++k) {
      const auto& exts = g->edges_out_of(x.range_vertex());
      if (exts.empty())
        break;
      std::vector<int> edges{exts[pick(rng, 0, static_cast<int>(exts.size()) - 1)]};
      edges.insert(edges.end(), x.edges().begin(), x.edges().end());
      x = Path::from_edges(g, std::move(edges));
    }
    try {
      out = out.union_with(Bisection::basic(x, y));
    } catch (const NotABisectionError&) {
      // keep the part assembled so far
    }
  }
  return out;
}

OracleCheckSummary oracle_check(std::uint64_t seed, int cases) {
  OracleCheckSummary summary;
  summary.seed = seed;
  summary.cases = cases;
  Rng rng(seed);
  auto record = [&](const std::string& what, const GraphPtr& g) {
    ++summary.discrepancies;
    if (summary.failures.size() < 20)
      summary.failures.push_back(what + " on graph " + g->name());
  };
  for (int trial = 0; trial < cases; ++trial) {
    auto g = random_graph(rng, 5, 8, true, "o" + std::to_string(trial));
    const auto a = random_cylinder(rng, g, 4, 4);
    const auto b = random_cylinder(rng, g, 4, 4);
    const auto ea = eval_cylinder(a);
    const auto eb = eval_cylinder(b);
    if (!oracle_equal(a.union_with(b), set_union(ea, eb)))
      record("cyl_union", g);
    if (!oracle_equal(a.difference(b), set_difference(ea, eb)))
      record("cyl_difference", g);
    if (!oracle_equal(a.intersection(b), set_intersection(ea, eb)))
      record("cyl_intersection", g);
    if ((a == b) != (ea == eb))
      record("cyl_equals", g);
    if (a.subset_of(b) != set_difference(ea, eb).empty())
      record("cyl_subset", g);
    if (a.is_empty() != ea.empty())
      record("cyl_is_empty", g);

    const auto s = random_bisection(rng, g, 3, 4);
    const auto t = random_bisection(rng, g, 3, 4);
    const auto es = eval_bisection(s);
    const auto et = eval_bisection(t);
    if (!oracle_equal(s.product(t), arrow_product(es, et)))
      record("bis_product", g);
    if (!oracle_equal(s.inverse(), arrow_inverse(es)))
      record("bis_inverse", g);
    if (!oracle_equal(s.range_set(), arrow_range(es)))
      record("bis_range", g);
    if (!oracle_equal(s.source_set(), arrow_source(es)))
      record("bis_source", g);
  }
  return summary;
}

} // namespace bpg
