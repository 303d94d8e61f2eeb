#ifndef BPG_BISECTION_HPP
#define BPG_BISECTION_HPP

#include <utility>
#include <vector>

#include "bpg/cylinder.hpp"
#include "bpg/graph.hpp"

namespace bpg {

/// A generator pair (x, y) with source(x) = source(y) denotes the basic
/// bisection Z(x,y) = {(x.z, |x|-|y|, y.z)}; the offset is implicit.
using BisectionPair = std::pair<Path, Path>;

/// The raw pair list does not denote a bisection; carries the two
/// offending generators and the side on which injectivity fails.
class NotABisectionError : public Error {
public:
  NotABisectionError(const std::string& what, std::string side, BisectionPair a,
                     BisectionPair b)
      : Error(what), side(std::move(side)), first(std::move(a)), second(std::move(b)) {}

  std::string side; // "range" or "source"
  BisectionPair first;
  BisectionPair second;
};

/// A compact-open bisection of the boundary path groupoid, stored as the
/// canonical finite disjoint union of basic bisections Z(x,y).
///
/// Normal form: no pair nests inside another ((x.w, y.w) under (x,y)), no
/// complete child family {(x.e, y.e)} occurs, the first components form an
/// antichain (range injectivity), the second components form an antichain
/// (source injectivity), and pairs are sorted.
class Bisection {
public:
  /// Canonicalizes a raw pair list; throws NotABisectionError when the
  /// denoted arrow set is not a bisection.
  static Bisection canonicalize(GraphPtr g, std::vector<BisectionPair> raw);

  static Bisection empty(GraphPtr g) { return Bisection(std::move(g), {}); }

  /// The basic bisection Z(x,y); requires source(x) = source(y).
  static Bisection basic(const Path& x, const Path& y);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<BisectionPair>& generators() const { return gens_; }

  bool is_empty() const { return gens_.empty(); }

  /// Pointwise groupoid product: Z(x,y).Z(x',y') is Z(x.w, y') if x' = y.w,
  /// Z(x, y'.w) if y = x'.w, and empty otherwise.
  Bisection product(const Bisection& other) const;

  /// Swaps the components of every generator; an involution.
  Bisection inverse() const;

  CylinderSet range_set() const;
  CylinderSet source_set() const;

  /// Union of two bisections; throws NotABisectionError when the union of
  /// the arrow sets fails range or source injectivity.
  Bisection union_with(const Bisection& other) const;

  friend bool operator==(const Bisection& a, const Bisection& b);

private:
  Bisection(GraphPtr g, std::vector<BisectionPair> gens)
      : graph_(std::move(g)), gens_(std::move(gens)) {}

  GraphPtr graph_;
  std::vector<BisectionPair> gens_; // canonical
};

/// The cylinder set viewed inside the unit space, as pairs (x,x).
Bisection embed_identity(const CylinderSet& s);

std::string to_string(const Bisection& b);

} // namespace bpg

#endif // BPG_BISECTION_HPP
