#ifndef BPG_RANDOM_HPP
#define BPG_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bpg/bisection.hpp"
#include "bpg/cylinder.hpp"
#include "bpg/graph.hpp"

namespace bpg {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi);
bool chance(Rng& rng, double p);

/// Random graph with 1..max_v vertices and 0..max_e edges. When acyclic,
/// edges respect a topological order so no directed cycle exists.
GraphPtr random_graph(Rng& rng, int max_v, int max_e, bool acyclic,
                      const std::string& name = "g");

/// Random path grown from a random vertex by extending at the source end.
Path random_path(Rng& rng, const GraphPtr& g, int max_len);

CylinderSet random_cylinder(Rng& rng, const GraphPtr& g, int max_gens, int max_len);

/// Random bisection built pair by pair; pairs that would break range or
/// source injectivity are dropped.
Bisection random_bisection(Rng& rng, const GraphPtr& g, int max_gens, int max_len);

struct OracleCheckSummary {
  std::uint64_t seed = 0;
  int cases = 0;
  int discrepancies = 0;
  std::vector<std::string> failures;
};

/// Randomized equivalence suite: on acyclic graphs, every shift-algebra
/// operation is compared against the setwise oracle.
OracleCheckSummary oracle_check(std::uint64_t seed, int cases);

} // namespace bpg

#endif // BPG_RANDOM_HPP
