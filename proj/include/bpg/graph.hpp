#ifndef BPG_GRAPH_HPP
#define BPG_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bpg/errors.hpp"

namespace bpg {

/// Total order on identifiers: by length first, then lexicographic.
/// Used everywhere a canonical order on vertex or edge ids is needed.
bool shortlex_less(std::string_view a, std::string_view b);

struct EdgeData {
  std::string id;
  std::string src;
  std::string rng;
};

/// Raw graph description as it appears in JSON, before validation.
struct GraphData {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<EdgeData> edges;
};

/// Returns the list of violated invariants; empty means the data is a
/// well-formed finite directed graph.
std::vector<std::string> validate_graph(const GraphData& data);

class DirectedGraph;
using GraphPtr = std::shared_ptr<const DirectedGraph>;

/// A finite directed graph with range map `rng` and source map `src`.
///
/// Vertices and edges are addressed by dense indices internally; ids are
/// kept for serialization. Instances are immutable after construction and
/// shared via GraphPtr.
class DirectedGraph {
public:
  /// Validates `data` and builds the graph; throws InvalidGraphError
  /// listing every violated invariant otherwise.
  static GraphPtr make(GraphData data);

  const std::string& name() const { return name_; }

  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  int edge_count() const { return static_cast<int>(edge_ids_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::string& edge_id(int e) const { return edge_ids_[e]; }

  /// Index of the vertex/edge with the given id, or -1 if absent.
  int vertex_index(std::string_view id) const;
  int edge_index(std::string_view id) const;

  int src(int e) const { return src_[e]; }
  int rng(int e) const { return rng_[e]; }

  /// rng-preimage of v, i.e. the edges a path at v extends by; canonical order.
  const std::vector<int>& edges_into(int v) const { return into_[v]; }
  const std::vector<int>& edges_out_of(int v) const { return out_of_[v]; }

  /// Regular means the rng-preimage is nonempty (finite graphs only).
  bool is_regular(int v) const { return !into_[v].empty(); }

  std::vector<int> regular_vertices() const;
  std::vector<int> singular_vertices() const;

  /// No directed cycle, hence finitely many paths and boundary paths.
  bool is_acyclic() const;

  /// Vertex/edge indices sorted by shortlex id — the canonical iteration order.
  const std::vector<int>& vertices_in_order() const { return vertex_order_; }
  const std::vector<int>& edges_in_order() const { return edge_order_; }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b);

private:
  DirectedGraph() = default;

  std::string name_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<int> src_;
  std::vector<int> rng_;
  std::vector<std::vector<int>> into_;
  std::vector<std::vector<int>> out_of_;
  std::vector<int> vertex_order_;
  std::vector<int> edge_order_;
  std::unordered_map<std::string, int> vertex_by_id_;
  std::unordered_map<std::string, int> edge_by_id_;
};

/// True when both pointers denote the same graph, structurally or by identity.
bool same_graph(const GraphPtr& a, const GraphPtr& b);

/// A finite path: either a single vertex (length 0) or a nonempty edge
/// sequence e1...en listed range-to-source, with src(ei) = rng(e(i+1)).
/// Paths extend at the source end.
class Path {
public:
  /// The length-0 path at a vertex.
  static Path at_vertex(GraphPtr g, int vertex);
  static Path at_vertex(GraphPtr g, std::string_view vertex_id);

  /// Edge path from indices in range-to-source order; throws
  /// ComposabilityError if consecutive edges do not compose.
  static Path from_edges(GraphPtr g, std::vector<int> edges);
  static Path from_edge_ids(GraphPtr g, const std::vector<std::string>& ids);

  const GraphPtr& graph() const { return graph_; }

  int length() const { return static_cast<int>(edges_.size()); }
  bool is_vertex() const { return edges_.empty(); }

  /// Vertex index of the length-0 path; only meaningful when is_vertex().
  int vertex() const { return vertex_; }

  int edge(int i) const { return edges_[i]; }
  const std::vector<int>& edges() const { return edges_; }

  int range_vertex() const;
  int source_vertex() const;

  /// Extends the path at the source end by one edge e with
  /// rng(e) = source_vertex().
  Path extend(int edge) const;

  /// Range-side initial segment of the given length (0 gives the vertex
  /// path at the range).
  Path prefix(int len) const;

  /// The unique z with *this = prefix(len) . z.
  Path suffix_after(int len) const;

  friend bool operator==(const Path& a, const Path& b);

private:
  Path(GraphPtr g, int vertex, std::vector<int> edges)
      : graph_(std::move(g)), vertex_(vertex), edges_(std::move(edges)) {}

  GraphPtr graph_;
  int vertex_ = -1; // only for length-0 paths
  std::vector<int> edges_;
};

/// Canonical total order on paths: length first, then componentwise
/// shortlex on ids. Vertex paths sort before edge paths.
bool path_less(const Path& a, const Path& b);

struct PathLess {
  bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};

/// Range-to-source concatenation; requires source(x) = range(y).
Path concat(const Path& x, const Path& y);

/// x is a range-side initial segment of y, i.e. y = x.z for some z.
bool is_prefix(const Path& x, const Path& y);

/// x ~ y: one is a prefix of the other.
bool comparable(const Path& x, const Path& y);

/// A finite path is a boundary path iff its source vertex is singular,
/// so the path cannot be extended at the source end.
bool is_boundary_path(const Path& x);

/// Human-readable form: the vertex id, or the edge ids joined with '.'.
std::string to_string(const Path& x);

} // namespace bpg

#endif // BPG_GRAPH_HPP
