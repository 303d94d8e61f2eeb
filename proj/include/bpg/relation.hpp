#ifndef BPG_RELATION_HPP
#define BPG_RELATION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bpg/family.hpp"
#include "bpg/graph.hpp"

namespace bpg {

/// A relation morphism between two graphs in degree-<=1 presentation:
/// vertex pairs r0 and path-to-edge pairs r1. The full relation on finite
/// paths is the multiplicative/decomposable closure of these sets and is
/// never materialized.
struct RelationMorphism {
  GraphPtr source_graph; // Gamma_1
  GraphPtr target_graph; // Gamma_2
  std::vector<std::pair<std::string, std::string>> r0; // (u in V1, v in V2)
  std::vector<std::pair<Path, std::string>> r1;        // (x in FP(Gamma_1), f in E2)

  /// Sorts and deduplicates r0 and r1 in canonical order.
  void normalize();

  friend bool operator==(const RelationMorphism& a, const RelationMorphism& b);
};

struct RelationValidation {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks the relation-morphism invariants: pairs land in the right sets
/// and r1 is source and range preserving over r0.
RelationValidation validate_relation(const RelationMorphism& r);

struct AdmissibilityVerdict {
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Verdicts for the five finitely checkable admissibility conditions.
/// Properness is automatic for a finite presentation; the fiber sizes are
/// still recorded. Regularity is checked through the equivalent cover
/// criterion on the induced family.
struct AdmissibilityReport {
  AdmissibilityVerdict vertex_disjoint;
  AdmissibilityVerdict source_bijective;
  AdmissibilityVerdict monotone;
  AdmissibilityVerdict proper;
  AdmissibilityVerdict regular;
  std::map<std::string, int> r0_fiber_sizes; // per target vertex
  std::map<std::string, int> r1_fiber_sizes; // per target edge

  bool admissible() const {
    return vertex_disjoint.pass && source_bijective.pass && monotone.pass &&
           proper.pass && regular.pass;
  }
};

AdmissibilityReport check_admissible(const RelationMorphism& r);

/// The induced family: omega[v] as the union of Z_u over u in R^{-1}(v)
/// and t[f] as the union of Z(x, s(x)) over x in R^{-1}(f). Requires the
/// relation to validate and be admissible; throws PreconditionError naming
/// the failing condition otherwise.
DckFamily relation_to_family(const RelationMorphism& r);

/// Thrown by family_to_relation when a (5.3.x) compatibility fails;
/// carries the first witness in canonical order.
class CompatibilityError : public PreconditionError {
public:
  CompatibilityError(const std::string& what, std::string condition,
                     VertexCompatWitness w)
      : PreconditionError(what, std::move(condition)), vertex_witness(std::move(w)) {}
  CompatibilityError(const std::string& what, std::string condition,
                     EdgeCompatWitness w)
      : PreconditionError(what, std::move(condition)), edge_witness(std::move(w)) {}

  std::optional<VertexCompatWitness> vertex_witness;
  std::optional<EdgeCompatWitness> edge_witness;
};

/// Recovers the admissible relation inducing the family: r0 collects the
/// (u,v) with Z_u contained in omega[v], and r1 reads off the unique pair
/// (x, f) from each nonempty product t[f].Z_u. Requires verify_family,
/// (5.3.1) and (5.3.2) to pass; throws CompatibilityError otherwise.
RelationMorphism family_to_relation(const DckFamily& f);

} // namespace bpg

#endif // BPG_RELATION_HPP
