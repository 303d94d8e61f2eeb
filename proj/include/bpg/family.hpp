#ifndef BPG_FAMILY_HPP
#define BPG_FAMILY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bpg/bisection.hpp"
#include "bpg/cylinder.hpp"
#include "bpg/graph.hpp"

namespace bpg {

/// A (possibly degenerate) dynamical Cuntz-Krieger family: a compact-open
/// subset omega[v] of the ambient boundary path space for every source
/// vertex, and a compact-open bisection t[e] for every source edge.
struct DckFamily {
  GraphPtr source_graph;
  GraphPtr ambient_graph;
  std::map<std::string, CylinderSet> omega; // keyed by source vertex id
  std::map<std::string, Bisection> t;       // keyed by source edge id

  /// Checks totality of omega/t and that every value lives over the
  /// ambient graph; throws Error otherwise.
  void check_wellformed() const;

  friend bool operator==(const DckFamily& a, const DckFamily& b);
};

struct VertexOverlapWitness { // condition (1): omega[v] meets omega[w]
  std::string v, w;
  CylinderSet overlap;
};

struct EdgeConditionWitness { // condition (2): source/range of t[e] is off
  std::string edge;
  std::string kind; // "source" or "range"
  CylinderSet expected;
  CylinderSet computed;
};

struct RangeOverlapWitness { // condition (3): ranges of t[e], t[f] meet
  std::string e, f;
  CylinderSet overlap;
};

struct RegularCoverWitness { // condition (4): ranges into v miss omega[v]
  std::string vertex;
  CylinderSet expected;
  CylinderSet computed;
};

struct VertexCompatWitness { // (5.3.1): Z_u . omega[v] neither empty nor Z_u
  std::string ambient_vertex;
  std::string source_vertex;
  CylinderSet computed;
};

struct EdgeCompatWitness { // (5.3.2): t[f] . Z_u not of the form Z(x, s(x))
  std::string edge;
  std::string ambient_vertex;
  Bisection computed;
};

template <typename Witness>
struct ConditionVerdict {
  bool pass = true;
  std::vector<Witness> failures;
};

/// Per-condition verdicts with failure witnesses. The family is accepted
/// as a dynamical Cuntz-Krieger family iff conditions (1)-(4) all pass;
/// nondegeneracy and the (5.3.x) compatibilities are recorded separately.
struct VerificationReport {
  ConditionVerdict<VertexOverlapWitness> dck1;
  ConditionVerdict<EdgeConditionWitness> dck2;
  ConditionVerdict<RangeOverlapWitness> dck3;
  ConditionVerdict<RegularCoverWitness> dck4;
  bool nondegenerate = false;
  ConditionVerdict<VertexCompatWitness> compat_531;
  ConditionVerdict<EdgeCompatWitness> compat_532;

  bool accepted() const {
    return dck1.pass && dck2.pass && dck3.pass && dck4.pass;
  }
};

/// Evaluates every condition exactly; failures are report entries.
VerificationReport verify_family(const DckFamily& f);

/// The omega sets partition the whole ambient boundary path space.
bool is_nondegenerate(const DckFamily& f);

/// (5.3.1): Z_u intersect omega[v] is empty or all of Z_u, for every
/// ambient vertex u and source vertex v.
ConditionVerdict<VertexCompatWitness> check_vertex_compat(const DckFamily& f);

/// (5.3.2): t[f] . Z_u is empty or a single basic Z(x, s(x)) with s(x) = u.
ConditionVerdict<EdgeCompatWitness> check_edge_compat(const DckFamily& f);

} // namespace bpg

#endif // BPG_FAMILY_HPP
