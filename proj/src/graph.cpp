#include "bpg/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bpg {

bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

std::vector<std::string> validate_graph(const GraphData& data) {
  std::vector<std::string> violations;

  std::set<std::string> vset;
  for (const auto& v : data.vertices) {
    if (!vset.insert(v).second)
      violations.push_back("duplicate vertex id: " + v);
  }

  std::set<std::string> eset;
  for (const auto& e : data.edges) {
    if (!eset.insert(e.id).second)
      violations.push_back("duplicate edge id: " + e.id);
    if (vset.count(e.id))
      violations.push_back("edge id collides with a vertex id: " + e.id);
    if (!vset.count(e.src))
      violations.push_back("dangling src: edge " + e.id + " -> " + e.src);
    if (!vset.count(e.rng))
      violations.push_back("dangling rng: edge " + e.id + " -> " + e.rng);
  }

  return violations;
}

GraphPtr DirectedGraph::make(GraphData data) {
  auto violations = validate_graph(data);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid graph";
    if (!data.name.empty())
      msg << " '" << data.name << "'";
    msg << ":";
    for (const auto& v : violations)
      msg << " " << v << ";";
    throw InvalidGraphError(msg.str(), std::move(violations));
  }

  auto g = std::shared_ptr<DirectedGraph>(new DirectedGraph());
  g->name_ = std::move(data.name);
  g->vertex_ids_ = std::move(data.vertices);

  const int nv = static_cast<int>(g->vertex_ids_.size());
  for (int v = 0; v < nv; ++v)
    g->vertex_by_id_.emplace(g->vertex_ids_[v], v);

  g->into_.resize(nv);
  g->out_of_.resize(nv);
  for (const auto& e : data.edges) {
    const int idx = static_cast<int>(g->edge_ids_.size());
    g->edge_ids_.push_back(e.id);
    g->edge_by_id_.emplace(e.id, idx);
    g->src_.push_back(g->vertex_by_id_.at(e.src));
    g->rng_.push_back(g->vertex_by_id_.at(e.rng));
  }
  const int ne = static_cast<int>(g->edge_ids_.size());

  g->vertex_order_.resize(nv);
  for (int v = 0; v < nv; ++v)
    g->vertex_order_[v] = v;
  std::sort(g->vertex_order_.begin(), g->vertex_order_.end(), [&](int a, int b) {
    return shortlex_less(g->vertex_ids_[a], g->vertex_ids_[b]);
  });

  g->edge_order_.resize(ne);
  for (int e = 0; e < ne; ++e)
    g->edge_order_[e] = e;
  std::sort(g->edge_order_.begin(), g->edge_order_.end(), [&](int a, int b) {
    return shortlex_less(g->edge_ids_[a], g->edge_ids_[b]);
  });

  // preimage lists in canonical edge order
  for (int e : g->edge_order_) {
    g->into_[g->rng_[e]].push_back(e);
    g->out_of_[g->src_[e]].push_back(e);
  }

  return g;
}

int DirectedGraph::vertex_index(std::string_view id) const {
  auto it = vertex_by_id_.find(std::string(id));
  return it == vertex_by_id_.end() ? -1 : it->second;
}

int DirectedGraph::edge_index(std::string_view id) const {
  auto it = edge_by_id_.find(std::string(id));
  return it == edge_by_id_.end() ? -1 : it->second;
}

std::vector<int> DirectedGraph::regular_vertices() const {
  std::vector<int> out;
  for (int v : vertex_order_)
    if (is_regular(v))
      out.push_back(v);
  return out;
}

std::vector<int> DirectedGraph::singular_vertices() const {
  std::vector<int> out;
  for (int v : vertex_order_)
    if (!is_regular(v))
      out.push_back(v);
  return out;
}

bool DirectedGraph::is_acyclic() const {
  // colors: 0 unseen, 1 on stack, 2 done
  std::vector<int> color(vertex_count(), 0);
  std::vector<std::pair<int, size_t>> stack;
  for (int start = 0; start < vertex_count(); ++start) {
    if (color[start] != 0)
      continue;
    color[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < out_of_[v].size()) {
        const int w = rng_[out_of_[v][i++]];
        if (color[w] == 1)
          return false;
        if (color[w] == 0) {
          color[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
  if (&a == &b)
    return true;
  return a.name_ == b.name_ && a.vertex_ids_ == b.vertex_ids_ &&
         a.edge_ids_ == b.edge_ids_ && a.src_ == b.src_ && a.rng_ == b.rng_;
}

bool same_graph(const GraphPtr& a, const GraphPtr& b) {
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return *a == *b;
}

Path Path::at_vertex(GraphPtr g, int vertex) {
  if (vertex < 0 || vertex >= g->vertex_count())
    throw Error("vertex index out of range");
  return Path(std::move(g), vertex, {});
}

Path Path::at_vertex(GraphPtr g, std::string_view vertex_id) {
  const int v = g->vertex_index(vertex_id);
  if (v < 0)
    throw Error("unknown vertex id: " + std::string(vertex_id));
  return at_vertex(std::move(g), v);
}

Path Path::from_edges(GraphPtr g, std::vector<int> edges) {
  if (edges.empty())
    throw Error("edge path must contain at least one edge");
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 0 || edges[i] >= g->edge_count())
      throw Error("edge index out of range");
    if (i + 1 < edges.size() && g->src(edges[i]) != g->rng(edges[i + 1]))
      throw ComposabilityError("edges do not compose: src(" + g->edge_id(edges[i]) +
                               ") != rng(" + g->edge_id(edges[i + 1]) + ")");
  }
  return Path(std::move(g), -1, std::move(edges));
}

Path Path::from_edge_ids(GraphPtr g, const std::vector<std::string>& ids) {
  std::vector<int> edges;
  edges.reserve(ids.size());
  for (const auto& id : ids) {
    const int e = g->edge_index(id);
    if (e < 0)
      throw Error("unknown edge id: " + id);
    edges.push_back(e);
  }
  return from_edges(std::move(g), std::move(edges));
}

int Path::range_vertex() const {
  return is_vertex() ? vertex_ : graph_->rng(edges_.front());
}

int Path::source_vertex() const {
  return is_vertex() ? vertex_ : graph_->src(edges_.back());
}

Path Path::extend(int edge) const {
  if (graph_->rng(edge) != source_vertex())
    throw ComposabilityError("cannot extend: rng(" + graph_->edge_id(edge) +
                             ") != source of path");
  std::vector<int> edges = edges_;
  edges.push_back(edge);
  return Path(graph_, -1, std::move(edges));
}

Path Path::prefix(int len) const {
  if (len < 0 || len > length())
    throw Error("prefix length out of range");
  if (len == 0)
    return Path(graph_, range_vertex(), {});
  return Path(graph_, -1, std::vector<int>(edges_.begin(), edges_.begin() + len));
}

Path Path::suffix_after(int len) const {
  if (len < 0 || len > length())
    throw Error("suffix split out of range");
  if (len == length())
    return Path(graph_, source_vertex(), {});
  return Path(graph_, -1, std::vector<int>(edges_.begin() + len, edges_.end()));
}

bool operator==(const Path& a, const Path& b) {
  if (a.is_vertex() != b.is_vertex())
    return false;
  if (a.is_vertex())
    return a.graph_->vertex_id(a.vertex_) == b.graph_->vertex_id(b.vertex_);
  if (a.edges_.size() != b.edges_.size())
    return false;
  for (size_t i = 0; i < a.edges_.size(); ++i)
    if (a.graph_->edge_id(a.edges_[i]) != b.graph_->edge_id(b.edges_[i]))
      return false;
  return true;
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length())
    return a.length() < b.length();
  if (a.is_vertex())
    return shortlex_less(a.graph()->vertex_id(a.vertex()),
                         b.graph()->vertex_id(b.vertex()));
  for (int i = 0; i < a.length(); ++i) {
    const auto& ia = a.graph()->edge_id(a.edge(i));
    const auto& ib = b.graph()->edge_id(b.edge(i));
    if (ia != ib)
      return shortlex_less(ia, ib);
  }
  return false;
}

Path concat(const Path& x, const Path& y) {
  if (!same_graph(x.graph(), y.graph()))
    throw GraphMismatchError("concat of paths over different graphs");
  if (x.source_vertex() != y.range_vertex())
    throw ComposabilityError("cannot concatenate: source(" + to_string(x) +
                             ") != range(" + to_string(y) + ")");
  if (x.is_vertex())
    return y;
  if (y.is_vertex())
    return x;
  std::vector<int> edges = x.edges();
  edges.insert(edges.end(), y.edges().begin(), y.edges().end());
  return Path::from_edges(x.graph(), std::move(edges));
}

bool is_prefix(const Path& x, const Path& y) {
  if (!same_graph(x.graph(), y.graph()))
    return false;
  if (x.length() > y.length())
    return false;
  if (x.is_vertex())
    return x.vertex() == y.range_vertex();
  for (int i = 0; i < x.length(); ++i)
    if (x.edge(i) != y.edge(i))
      return false;
  return true;
}

bool comparable(const Path& x, const Path& y) {
  return is_prefix(x, y) || is_prefix(y, x);
}

bool is_boundary_path(const Path& x) {
  return !x.graph()->is_regular(x.source_vertex());
}

std::string to_string(const Path& x) {
  if (x.is_vertex())
    return x.graph()->vertex_id(x.vertex());
  std::string out;
  for (int i = 0; i < x.length(); ++i) {
    if (i > 0)
      out += '.';
    out += x.graph()->edge_id(x.edge(i));
  }
  return out;
}

} // namespace bpg
