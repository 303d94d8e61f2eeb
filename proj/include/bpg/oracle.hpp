#ifndef BPG_ORACLE_HPP
#define BPG_ORACLE_HPP

#include <set>
#include <vector>

#include "bpg/bisection.hpp"
#include "bpg/cylinder.hpp"
#include "bpg/graph.hpp"

namespace bpg {

/// Oracle evaluation was requested over a cyclic graph, whose boundary
/// path space is infinite.
class CyclicGraphError : public Error {
public:
  using Error::Error;
};

/// An explicit arrow (z, k, z') of the boundary path groupoid: z = x.w and
/// z' = y.w for some decomposition with |x| - |y| = k. For an acyclic
/// graph k is forced to |z| - |z'|, so arrows compare by their endpoints.
struct GroupoidArrow {
  Path range_path;
  int offset;
  Path source_path;
};

bool operator==(const GroupoidArrow& a, const GroupoidArrow& b);
bool arrow_less(const GroupoidArrow& a, const GroupoidArrow& b);

struct ArrowLess {
  bool operator()(const GroupoidArrow& a, const GroupoidArrow& b) const {
    return arrow_less(a, b);
  }
};

using PathSet = std::set<Path, PathLess>;
using ArrowSet = std::set<GroupoidArrow, ArrowLess>;

/// All finite boundary paths, i.e. paths whose source vertex is singular.
/// Throws CyclicGraphError when the graph has a directed cycle.
std::vector<Path> boundary_paths(const GraphPtr& g);

/// The whole boundary path groupoid as an explicit arrow set: two boundary
/// paths are tail-equivalent iff they share a source vertex, and the lag is
/// then the length difference.
std::vector<GroupoidArrow> materialize_groupoid(const GraphPtr& g);

/// Literal set semantics of the generators.
PathSet eval_cylinder(const CylinderSet& s);
ArrowSet eval_bisection(const Bisection& b);

// setwise counterparts of the symbolic operations
PathSet set_union(const PathSet& a, const PathSet& b);
PathSet set_difference(const PathSet& a, const PathSet& b);
PathSet set_intersection(const PathSet& a, const PathSet& b);
ArrowSet arrow_product(const ArrowSet& a, const ArrowSet& b);
ArrowSet arrow_inverse(const ArrowSet& a);
ArrowSet arrow_union(const ArrowSet& a, const ArrowSet& b);
PathSet arrow_range(const ArrowSet& a);
PathSet arrow_source(const ArrowSet& a);

/// Compares a symbolic result against an explicitly computed set.
bool oracle_equal(const CylinderSet& symbolic, const PathSet& setwise);
bool oracle_equal(const Bisection& symbolic, const ArrowSet& setwise);

} // namespace bpg

#endif // BPG_ORACLE_HPP
