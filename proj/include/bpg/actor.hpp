#ifndef BPG_ACTOR_HPP
#define BPG_ACTOR_HPP

#include <map>
#include <mutex>
#include <optional>

#include "bpg/family.hpp"

namespace bpg {

/// The multiplicative extension of a family to all paths of its source
/// graph: a vertex path goes to the identity bisection on its omega set,
/// an edge path f1...fn to the product t[f1]...t[fn]. Evaluations are
/// memoized; cache fills are idempotent and guarded, so shared use from
/// several threads observes the same results.
class Theta {
public:
  explicit Theta(DckFamily family) : family_(std::move(family)) {
    family_.check_wellformed();
  }

  const DckFamily& family() const { return family_; }

  /// Image of a path of the source graph.
  Bisection path_image(const Path& x) const;

  /// Sends the union of the Z_x to the union of the ranges of the images.
  CylinderSet map_cylinder(const CylinderSet& s) const;

  /// Sends the union of the Z(x,y) to the union of image(x).image(y)^{-1}.
  Bisection map_bisection(const Bisection& b) const;

private:
  DckFamily family_;
  mutable std::mutex mutex_;
  mutable std::map<Path, Bisection, PathLess> memo_;
};

/// The identity family of a graph: omega[v] = Z_v, t[e] = Z(e, s(e)).
DckFamily identity_family(GraphPtr g);

/// Pushes the inner family f through the outer family g. Requires both to
/// verify and be nondegenerate and the source graph of g to equal the
/// ambient graph of f; the composite is re-verified and an invariant
/// breach is a hard error.
DckFamily compose_families(const DckFamily& f, const DckFamily& g);

struct InverseReport {
  bool inverse = false;
  bool left_composite_matches = false;  // compose(g, f) vs identity
  bool right_composite_matches = false; // compose(f, g) vs identity
};

/// True iff compose(g,f) and compose(f,g) are the identity families of the
/// respective graphs. A graph mismatch yields false, not an error.
InverseReport verify_inverse(const DckFamily& f, const DckFamily& g);

/// Exhaustive search for an inverse family whose generators use paths of
/// length <= max_len, in canonical enumeration order; returns the first
/// hit or absence.
std::optional<DckFamily> search_inverse(const DckFamily& f, int max_len);

} // namespace bpg

#endif // BPG_ACTOR_HPP
