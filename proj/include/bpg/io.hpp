#ifndef BPG_IO_HPP
#define BPG_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "bpg/actor.hpp"
#include "bpg/family.hpp"
#include "bpg/relation.hpp"

namespace bpg {

using json = nlohmann::ordered_json;

/// Named graphs, relations and families; every cross-reference in the
/// JSON schemas is resolved against it.
class Workspace {
public:
  void add_graph(GraphPtr g);

  const GraphPtr& graph(const std::string& name) const; // throws ParseError

  bool has_graph(const std::string& name) const { return graphs_.count(name) > 0; }

  std::vector<GraphPtr> graphs() const;

private:
  std::map<std::string, GraphPtr> graphs_;
};

// parsing; all throw ParseError on malformed input or unresolved names
GraphData parse_graph_data(const json& j, const std::string& fallback_name);
Path parse_path(const json& j, const GraphPtr& g);
CylinderSet parse_cylinder(const json& j, const Workspace& ws);
Bisection parse_bisection(const json& j, const Workspace& ws);
DckFamily parse_family(const json& j, const Workspace& ws);
RelationMorphism parse_relation(const json& j, const Workspace& ws);

// canonical serialization: equal values serialize identically
json to_json(const GraphPtr& g);
json to_json(const Path& p);
json to_json(const CylinderSet& s);
json to_json(const Bisection& b);
json to_json(const DckFamily& f);
json to_json(const RelationMorphism& r);
json to_json(const VerificationReport& report);
json to_json(const AdmissibilityReport& report);
json to_json(const RelationValidation& report);
json to_json(const InverseReport& report);

/// Canonical text form: two-space indented JSON with a trailing newline.
std::string dump_canonical(const json& j);

} // namespace bpg

#endif // BPG_IO_HPP
