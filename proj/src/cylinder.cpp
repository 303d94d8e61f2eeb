#include "bpg/cylinder.hpp"

#include <algorithm>
#include <optional>

namespace bpg {

namespace {

void sort_unique(std::vector<Path>& gens) {
  std::sort(gens.begin(), gens.end(), PathLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
}

// Keeps only the prefix-minimal paths; Z_x absorbs Z_y whenever x <= y.
void antichain_reduce(std::vector<Path>& gens) {
  std::vector<Path> kept;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens) {
      if (&h == &g)
        continue;
      if (is_prefix(h, g) && !(h == g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated)
      kept.push_back(g);
  }
  gens = std::move(kept);
  sort_unique(gens);
}

// One contraction pass: if for some parent p the complete child family
// {p.e : rng(e) = source(p)} lies in gens, replace it by p. Exact because
// Z_p is the disjoint union of its children when source(p) is regular.
bool contract_once(std::vector<Path>& gens) {
  for (const auto& g : gens) {
    if (g.is_vertex())
      continue;
    const Path parent = g.prefix(g.length() - 1);
    const auto& edges = parent.graph()->edges_into(parent.source_vertex());
    bool complete = true;
    for (int e : edges) {
      const Path child = parent.extend(e);
      if (!std::binary_search(gens.begin(), gens.end(), child, PathLess{})) {
        complete = false;
        break;
      }
    }
    if (!complete)
      continue;
    std::vector<Path> next;
    for (const auto& h : gens) {
      if (is_prefix(parent, h))
        continue; // children (and any other extensions) are absorbed
      next.push_back(h);
    }
    next.push_back(parent);
    gens = std::move(next);
    sort_unique(gens);
    return true;
  }
  return false;
}

} // namespace

CylinderSet CylinderSet::canonicalize(GraphPtr g, std::vector<Path> raw) {
  for (const auto& p : raw)
    if (!same_graph(p.graph(), g))
      throw GraphMismatchError("cylinder generator over a different graph");
  sort_unique(raw);
  antichain_reduce(raw);
  while (contract_once(raw)) {
  }
  return CylinderSet(std::move(g), std::move(raw));
}

CylinderSet CylinderSet::basic(const Path& x) {
  return CylinderSet(x.graph(), {x});
}

CylinderSet CylinderSet::union_with(const CylinderSet& other) const {
  if (!same_graph(graph_, other.graph_))
    throw GraphMismatchError("union of cylinder sets over different graphs");
  std::vector<Path> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return canonicalize(graph_, std::move(gens));
}

namespace {

// Z_x minus the union of the Z_y, y in subtrahend. Expands x at regular
// sources until every subtrahend generator is comparable or disjoint;
// recursion depth is bounded by the longest subtrahend generator.
void difference_one(const Path& x, const std::vector<Path>& subtrahend,
                    std::vector<Path>& out) {
  bool extends_some = false;
  bool extended_by_some = false;
  for (const auto& y : subtrahend) {
    if (is_prefix(y, x)) {
      extends_some = true;
      break;
    }
    if (is_prefix(x, y))
      extended_by_some = true;
  }
  if (extends_some)
    return; // Z_x is contained in the subtrahend
  if (!extended_by_some) {
    out.push_back(x); // Z_x is disjoint from the subtrahend
    return;
  }
  // some y strictly extends x, so source(x) is regular; expand
  for (int e : x.graph()->edges_into(x.source_vertex()))
    difference_one(x.extend(e), subtrahend, out);
}

} // namespace

CylinderSet CylinderSet::difference(const CylinderSet& other) const {
  if (!same_graph(graph_, other.graph_))
    throw GraphMismatchError("difference of cylinder sets over different graphs");
  if (other.is_empty())
    return *this;
  std::vector<Path> out;
  for (const auto& x : gens_)
    difference_one(x, other.gens_, out);
  return canonicalize(graph_, std::move(out));
}

CylinderSet CylinderSet::intersection(const CylinderSet& other) const {
  if (!same_graph(graph_, other.graph_))
    throw GraphMismatchError("intersection of cylinder sets over different graphs");
  // Z_x meets Z_y iff x ~ y, and then the intersection is the longer one.
  std::vector<Path> out;
  for (const auto& x : gens_)
    for (const auto& y : other.gens_) {
      if (is_prefix(x, y))
        out.push_back(y);
      else if (is_prefix(y, x))
        out.push_back(x);
    }
  return canonicalize(graph_, std::move(out));
}

bool CylinderSet::subset_of(const CylinderSet& other) const {
  return difference(other).is_empty();
}

bool operator==(const CylinderSet& a, const CylinderSet& b) {
  return same_graph(a.graph_, b.graph_) && a.gens_ == b.gens_;
}

CylinderSet full_unit_space(GraphPtr g) {
  std::vector<Path> gens;
  for (int v : g->vertices_in_order())
    gens.push_back(Path::at_vertex(g, v));
  return CylinderSet::canonicalize(std::move(g), std::move(gens));
}

std::vector<Path> atom_antichain(const GraphPtr& g, int depth) {
  std::vector<Path> atoms;
  std::vector<Path> frontier;
  for (int v : g->vertices_in_order())
    frontier.push_back(Path::at_vertex(g, v));
  while (!frontier.empty()) {
    Path p = frontier.back();
    frontier.pop_back();
    if (p.length() >= depth || !g->is_regular(p.source_vertex())) {
      atoms.push_back(p);
      continue;
    }
    for (int e : g->edges_into(p.source_vertex()))
      frontier.push_back(p.extend(e));
  }
  std::sort(atoms.begin(), atoms.end(), PathLess{});
  return atoms;
}

std::string to_string(const CylinderSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.generators().size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(s.generators()[i]);
  }
  return out + "}";
}

} // namespace bpg
