#include "bpg/bisection.hpp"

#include <algorithm>

namespace bpg {

namespace {

bool pair_less(const BisectionPair& a, const BisectionPair& b) {
  if (!(a.first == b.first))
    return path_less(a.first, b.first);
  return path_less(a.second, b.second);
}

bool pair_eq(const BisectionPair& a, const BisectionPair& b) {
  return a.first == b.first && a.second == b.second;
}

void sort_unique(std::vector<BisectionPair>& gens) {
  std::sort(gens.begin(), gens.end(), pair_less);
  gens.erase(std::unique(gens.begin(), gens.end(), pair_eq), gens.end());
}

// (x', y') nests inside (x, y) iff x' = x.w and y' = y.w for the same w;
// then Z(x',y') is contained in Z(x,y).
bool nests_inside(const BisectionPair& outer, const BisectionPair& inner) {
  const auto& [x, y] = outer;
  const auto& [xp, yp] = inner;
  if (!is_prefix(x, xp) || !is_prefix(y, yp))
    return false;
  if (xp.length() - x.length() != yp.length() - y.length())
    return false;
  return xp.suffix_after(x.length()) == yp.suffix_after(y.length());
}

void remove_nested(std::vector<BisectionPair>& gens) {
  std::vector<BisectionPair> kept;
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : gens) {
      if (pair_eq(g, h))
        continue;
      if (nests_inside(h, g)) {
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

// Contract a complete child family {(x.e, y.e) : rng(e) = source(x)} to its
// parent (x, y). Both components of a child end in the same edge.
bool contract_once(std::vector<BisectionPair>& gens) {
  for (const auto& g : gens) {
    const auto& [gx, gy] = g;
    if (gx.is_vertex() || gy.is_vertex())
      continue;
    if (gx.edge(gx.length() - 1) != gy.edge(gy.length() - 1))
      continue;
    const BisectionPair parent{gx.prefix(gx.length() - 1), gy.prefix(gy.length() - 1)};
    const auto& edges = parent.first.graph()->edges_into(parent.first.source_vertex());
    bool complete = true;
    for (int e : edges) {
      const BisectionPair child{parent.first.extend(e), parent.second.extend(e)};
      if (!std::binary_search(gens.begin(), gens.end(), child, pair_less)) {
        complete = false;
        break;
      }
    }
    if (!complete)
      continue;
    std::vector<BisectionPair> next;
    for (const auto& h : gens)
      if (!nests_inside(parent, h))
        next.push_back(h);
    next.push_back(parent);
    gens = std::move(next);
    sort_unique(gens);
    return true;
  }
  return false;
}

// After nesting removal and contraction, any residual comparability among
// first components breaks injectivity of the range map on the arrow set,
// and likewise for second components and the source map.
void check_injective(const std::vector<BisectionPair>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (comparable(gens[i].first, gens[j].first))
        throw NotABisectionError(
            "not a bisection: range map not injective on Z(" +
                to_string(gens[i].first) + "," + to_string(gens[i].second) +
                ") and Z(" + to_string(gens[j].first) + "," +
                to_string(gens[j].second) + ")",
            "range", gens[i], gens[j]);
      if (comparable(gens[i].second, gens[j].second))
        throw NotABisectionError(
            "not a bisection: source map not injective on Z(" +
                to_string(gens[i].first) + "," + to_string(gens[i].second) +
                ") and Z(" + to_string(gens[j].first) + "," +
                to_string(gens[j].second) + ")",
            "source", gens[i], gens[j]);
    }
}

} // namespace

Bisection Bisection::canonicalize(GraphPtr g, std::vector<BisectionPair> raw) {
  for (const auto& [x, y] : raw) {
    if (!same_graph(x.graph(), g) || !same_graph(y.graph(), g))
      throw GraphMismatchError("bisection generator over a different graph");
    if (x.source_vertex() != y.source_vertex())
      throw ComposabilityError("generator pair (" + to_string(x) + "," + to_string(y) +
                               ") has mismatched sources");
  }
  sort_unique(raw);
  remove_nested(raw);
  while (contract_once(raw)) {
  }
  check_injective(raw);
  return Bisection(std::move(g), std::move(raw));
}

Bisection Bisection::basic(const Path& x, const Path& y) {
  return canonicalize(x.graph(), {{x, y}});
}

Bisection Bisection::product(const Bisection& other) const {
  if (!same_graph(graph_, other.graph_))
    throw GraphMismatchError("product of bisections over different graphs");
  std::vector<BisectionPair> out;
  for (const auto& [x, y] : gens_)
    for (const auto& [xp, yp] : other.gens_) {
      if (is_prefix(y, xp)) {
        const Path w = xp.suffix_after(y.length());
        out.emplace_back(concat(x, w), yp);
      } else if (is_prefix(xp, y)) {
        const Path w = y.suffix_after(xp.length());
        out.emplace_back(x, concat(yp, w));
      }
    }
  return canonicalize(graph_, std::move(out));
}

Bisection Bisection::inverse() const {
  std::vector<BisectionPair> out;
  out.reserve(gens_.size());
  for (const auto& [x, y] : gens_)
    out.emplace_back(y, x);
  return canonicalize(graph_, std::move(out));
}

CylinderSet Bisection::range_set() const {
  std::vector<Path> gens;
  gens.reserve(gens_.size());
  for (const auto& [x, y] : gens_)
    gens.push_back(x);
  return CylinderSet::canonicalize(graph_, std::move(gens));
}

CylinderSet Bisection::source_set() const {
  std::vector<Path> gens;
  gens.reserve(gens_.size());
  for (const auto& [x, y] : gens_)
    gens.push_back(y);
  return CylinderSet::canonicalize(graph_, std::move(gens));
}

Bisection Bisection::union_with(const Bisection& other) const {
  if (!same_graph(graph_, other.graph_))
    throw GraphMismatchError("union of bisections over different graphs");
  std::vector<BisectionPair> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return canonicalize(graph_, std::move(gens));
}

bool operator==(const Bisection& a, const Bisection& b) {
  if (!same_graph(a.graph_, b.graph_) || a.gens_.size() != b.gens_.size())
    return false;
  for (size_t i = 0; i < a.gens_.size(); ++i)
    if (!pair_eq(a.gens_[i], b.gens_[i]))
      return false;
  return true;
}

Bisection embed_identity(const CylinderSet& s) {
  std::vector<BisectionPair> gens;
  gens.reserve(s.generators().size());
  for (const auto& x : s.generators())
    gens.emplace_back(x, x);
  return Bisection::canonicalize(s.graph(), std::move(gens));
}

std::string to_string(const Bisection& b) {
  std::string out = "{";
  for (size_t i = 0; i < b.generators().size(); ++i) {
    if (i)
      out += ", ";
    out += "(" + to_string(b.generators()[i].first) + "," +
           to_string(b.generators()[i].second) + ")";
  }
  return out + "}";
}

} // namespace bpg
