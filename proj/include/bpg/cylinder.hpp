#ifndef BPG_CYLINDER_HPP
#define BPG_CYLINDER_HPP

#include <vector>

#include "bpg/graph.hpp"

namespace bpg {

/// A compact-open subset of the boundary path space, kept in canonical
/// normal form: the generator paths are a sorted antichain and no complete
/// child family {x.e : rng(e) = source(x)} occurs among them.
///
/// Two CylinderSets denote the same point set iff their canonical
/// generators coincide, so equality is structural.
class CylinderSet {
public:
  /// Canonicalizes a raw generator list: drops generators extending
  /// another, contracts complete child families to their parent, sorts.
  static CylinderSet canonicalize(GraphPtr g, std::vector<Path> raw);

  static CylinderSet empty(GraphPtr g) { return CylinderSet(std::move(g), {}); }

  /// The single-generator set Z_x.
  static CylinderSet basic(const Path& x);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Path>& generators() const { return gens_; }

  bool is_empty() const { return gens_.empty(); }

  CylinderSet union_with(const CylinderSet& other) const;
  CylinderSet difference(const CylinderSet& other) const;
  CylinderSet intersection(const CylinderSet& other) const;
  bool subset_of(const CylinderSet& other) const;

  friend bool operator==(const CylinderSet& a, const CylinderSet& b);

private:
  CylinderSet(GraphPtr g, std::vector<Path> gens)
      : graph_(std::move(g)), gens_(std::move(gens)) {}

  GraphPtr graph_;
  std::vector<Path> gens_; // canonical

  friend class Bisection;
};

/// The whole boundary path space, as the union of all vertex cylinders.
CylinderSet full_unit_space(GraphPtr g);

/// The antichain obtained from the vertex cylinders by expanding every
/// generator with a regular source until it has the given length or a
/// singular source. The cylinders over the result partition the boundary
/// path space, and every cylinder with generators of length <= depth is a
/// disjoint union of them.
std::vector<Path> atom_antichain(const GraphPtr& g, int depth);

std::string to_string(const CylinderSet& s);

} // namespace bpg

#endif // BPG_CYLINDER_HPP
