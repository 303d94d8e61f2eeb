// bpg: verify dynamical Cuntz-Krieger families, convert them to and from
// admissible relation morphisms, and compose them as actors.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpg/actor.hpp"
#include "bpg/io.hpp"
#include "bpg/oracle.hpp"
#include "bpg/random.hpp"
#include "bpg/relation.hpp"

namespace {

using bpg::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::vector<std::string> graph_files;
  std::vector<std::string> relation_files;
  std::vector<std::string> family_files;
  std::string out_file;
  int max_len = 2;
  std::uint64_t seed = 1;
  int cases = 500;
  bool json_mode = true;
};

struct LoadedWorkspace {
  bpg::Workspace graphs;
  std::vector<std::pair<std::string, bpg::RelationMorphism>> relations;
  std::vector<std::pair<std::string, bpg::DckFamily>> families;
};

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in)
    throw bpg::ParseError("cannot open " + file);
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw bpg::ParseError(file + ": " + e.what());
  }
  return j;
}

std::string stem_of(const std::string& file) {
  return std::filesystem::path(file).stem().string();
}

LoadedWorkspace load(const Options& opt) {
  LoadedWorkspace ws;
  for (const auto& file : opt.graph_files) {
    auto data = bpg::parse_graph_data(read_json_file(file), stem_of(file));
    ws.graphs.add_graph(bpg::DirectedGraph::make(std::move(data)));
  }
  for (const auto& file : opt.relation_files)
    ws.relations.emplace_back(stem_of(file),
                              bpg::parse_relation(read_json_file(file), ws.graphs));
  for (const auto& file : opt.family_files)
    ws.families.emplace_back(stem_of(file),
                             bpg::parse_family(read_json_file(file), ws.graphs));
  return ws;
}

const bpg::DckFamily& pick_family(const LoadedWorkspace& ws, const std::string& name,
                                  size_t default_index) {
  if (name.empty()) {
    if (default_index < ws.families.size())
      return ws.families[default_index].second;
    throw bpg::ParseError("no family loaded; pass --family <file>");
  }
  for (const auto& [n, f] : ws.families)
    if (n == name)
      return f;
  throw bpg::ParseError("unknown family: " + name);
}

const bpg::RelationMorphism& pick_relation(const LoadedWorkspace& ws,
                                           const std::string& name) {
  if (name.empty()) {
    if (!ws.relations.empty())
      return ws.relations.front().second;
    throw bpg::ParseError("no relation loaded; pass --relation <file>");
  }
  for (const auto& [n, r] : ws.relations)
    if (n == name)
      return r;
  throw bpg::ParseError("unknown relation: " + name);
}

void emit(const Options& opt, const json& artifact) {
  const auto text = bpg::dump_canonical(artifact);
  if (opt.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_file);
  if (!out)
    throw bpg::ParseError("cannot write " + opt.out_file);
  out << text;
}

void add_common_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--graphs", opt.graph_files, "graph JSON files")
      ->expected(-1);
  cmd->add_option("--relation", opt.relation_files, "relation JSON file");
  cmd->add_option("--family", opt.family_files, "family JSON file");
  cmd->add_option("--out", opt.out_file, "write the artifact or report here");
  cmd->add_flag("--json", opt.json_mode, "emit JSON (default and only mode)");
}

json error_json(const std::string& kind, const std::string& what) {
  return json{{"error", kind}, {"message", what}};
}

int cmd_info(const Options& opt) {
  const auto ws = load(opt);
  json graphs = json::object();
  for (const auto& g : ws.graphs.graphs()) {
    json entry{{"vertices", g->vertex_count()}, {"edges", g->edge_count()}};
    json regular = json::array();
    for (int v : g->regular_vertices())
      regular.push_back(g->vertex_id(v));
    entry["regular_vertices"] = std::move(regular);
    entry["acyclic"] = g->is_acyclic();
    if (g->is_acyclic())
      entry["boundary_paths"] = bpg::boundary_paths(g).size();
    graphs[g->name()] = std::move(entry);
  }
  json relations = json::array();
  for (const auto& [name, r] : ws.relations)
    relations.push_back(json{{"name", name},
                             {"source_graph", r.source_graph->name()},
                             {"target_graph", r.target_graph->name()}});
  json families = json::array();
  for (const auto& [name, f] : ws.families)
    families.push_back(json{{"name", name},
                            {"source_graph", f.source_graph->name()},
                            {"ambient_graph", f.ambient_graph->name()}});
  emit(opt, json{{"graphs", std::move(graphs)},
                 {"relations", std::move(relations)},
                 {"families", std::move(families)}});
  return kExitOk;
}

int cmd_check_family(const Options& opt, const std::string& name) {
  const auto ws = load(opt);
  const auto& family = pick_family(ws, name, 0);
  const auto report = bpg::verify_family(family);
  emit(opt, bpg::to_json(report));
  return report.accepted() ? kExitOk : kExitVerificationFailed;
}

int cmd_check_relation(const Options& opt, const std::string& name) {
  const auto ws = load(opt);
  const auto& relation = pick_relation(ws, name);
  const auto validation = bpg::validate_relation(relation);
  json out{{"validation", bpg::to_json(validation)}};
  bool ok = validation.valid;
  if (validation.valid) {
    const auto adm = bpg::check_admissible(relation);
    out["admissibility"] = bpg::to_json(adm);
    ok = adm.admissible();
  }
  emit(opt, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_from_relation(const Options& opt, const std::string& name) {
  const auto ws = load(opt);
  const auto& relation = pick_relation(ws, name);
  const auto family = bpg::relation_to_family(relation);
  emit(opt, bpg::to_json(family));
  return kExitOk;
}

int cmd_to_relation(const Options& opt, const std::string& name) {
  const auto ws = load(opt);
  const auto& family = pick_family(ws, name, 0);
  const auto relation = bpg::family_to_relation(family);
  emit(opt, bpg::to_json(relation));
  return kExitOk;
}

int cmd_compose(const Options& opt, const std::string& inner_name,
                const std::string& outer_name) {
  const auto ws = load(opt);
  const auto& inner = pick_family(ws, inner_name, 0);
  const auto& outer = pick_family(ws, outer_name, 1);
  const auto composite = bpg::compose_families(inner, outer);
  emit(opt, bpg::to_json(composite));
  return kExitOk;
}

int cmd_identity(const Options& opt, const std::string& graph_name) {
  const auto ws = load(opt);
  bpg::GraphPtr g;
  if (graph_name.empty()) {
    const auto all = ws.graphs.graphs();
    if (all.size() != 1)
      throw bpg::ParseError("pass the graph name when several graphs are loaded");
    g = all.front();
  } else {
    g = ws.graphs.graph(graph_name);
  }
  emit(opt, bpg::to_json(bpg::identity_family(g)));
  return kExitOk;
}

int cmd_verify_inverse(const Options& opt, const std::string& first,
                       const std::string& second) {
  const auto ws = load(opt);
  const auto& f = pick_family(ws, first, 0);
  const auto& g = pick_family(ws, second, 1);
  const auto report = bpg::verify_inverse(f, g);
  emit(opt, bpg::to_json(report));
  return report.inverse ? kExitOk : kExitVerificationFailed;
}

int cmd_search_inverse(const Options& opt, const std::string& name) {
  const auto ws = load(opt);
  const auto& family = pick_family(ws, name, 0);
  const auto found = bpg::search_inverse(family, opt.max_len);
  if (!found) {
    emit(opt, json{{"found", false}, {"max_len", opt.max_len}});
    return kExitVerificationFailed;
  }
  emit(opt, bpg::to_json(*found));
  return kExitOk;
}

int cmd_oracle_check(const Options& opt) {
  const auto summary = bpg::oracle_check(opt.seed, opt.cases);
  emit(opt, json{{"seed", summary.seed},
                 {"cases", summary.cases},
                 {"discrepancies", summary.discrepancies},
                 {"failures", summary.failures}});
  return summary.discrepancies == 0 ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"compact-open bisection calculus for boundary path groupoids"};
  app.require_subcommand(1);

  Options opt;
  std::string name_a, name_b;

  auto* info = app.add_subcommand("info", "summarize the loaded workspace");
  add_common_options(info, opt);

  auto* check_family =
      app.add_subcommand("check-family", "verify a dynamical Cuntz-Krieger family");
  add_common_options(check_family, opt);
  check_family->add_option("name", name_a, "family name (default: first loaded)");

  auto* check_relation =
      app.add_subcommand("check-relation", "validate a relation and check admissibility");
  add_common_options(check_relation, opt);
  check_relation->add_option("name", name_a, "relation name");

  auto* from_relation = app.add_subcommand(
      "from-relation", "build the induced family of an admissible relation");
  add_common_options(from_relation, opt);
  from_relation->add_option("name", name_a, "relation name");

  auto* to_relation = app.add_subcommand(
      "to-relation", "recover the admissible relation inducing a family");
  add_common_options(to_relation, opt);
  to_relation->add_option("name", name_a, "family name");

  auto* compose = app.add_subcommand("compose", "compose two families as actors");
  add_common_options(compose, opt);
  compose->add_option("inner", name_a, "inner family name");
  compose->add_option("outer", name_b, "outer family name");

  auto* identity = app.add_subcommand("identity", "emit the identity family of a graph");
  add_common_options(identity, opt);
  identity->add_option("name", name_a, "graph name");

  auto* verify_inverse =
      app.add_subcommand("verify-inverse", "check that two families invert each other");
  add_common_options(verify_inverse, opt);
  verify_inverse->add_option("first", name_a, "first family name");
  verify_inverse->add_option("second", name_b, "second family name");

  auto* search_inverse =
      app.add_subcommand("search-inverse", "bounded exhaustive search for an inverse");
  add_common_options(search_inverse, opt);
  search_inverse->add_option("name", name_a, "family name");
  search_inverse->add_option("--max-len", opt.max_len, "generator path length bound")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand(
      "oracle-check", "randomized agreement of the symbolic algebra with the oracle");
  add_common_options(oracle, opt);
  oracle->add_option("--seed", opt.seed, "random seed");
  oracle->add_option("--cases", opt.cases, "number of random cases")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (info->parsed())
      return cmd_info(opt);
    if (check_family->parsed())
      return cmd_check_family(opt, name_a);
    if (check_relation->parsed())
      return cmd_check_relation(opt, name_a);
    if (from_relation->parsed())
      return cmd_from_relation(opt, name_a);
    if (to_relation->parsed())
      return cmd_to_relation(opt, name_a);
    if (compose->parsed())
      return cmd_compose(opt, name_a, name_b);
    if (identity->parsed())
      return cmd_identity(opt, name_a);
    if (verify_inverse->parsed())
      return cmd_verify_inverse(opt, name_a, name_b);
    if (search_inverse->parsed())
      return cmd_search_inverse(opt, name_a);
    if (oracle->parsed())
      return cmd_oracle_check(opt);
  } catch (const bpg::CompatibilityError& e) {
    json err = error_json("precondition", e.what());
    err["condition"] = "(" + e.condition + ")";
    if (e.vertex_witness) {
      err["witness"] = json{{"ambient_vertex", e.vertex_witness->ambient_vertex},
                            {"source_vertex", e.vertex_witness->source_vertex},
                            {"computed", bpg::to_json(e.vertex_witness->computed)}};
    } else if (e.edge_witness) {
      err["witness"] = json{{"edge", e.edge_witness->edge},
                            {"ambient_vertex", e.edge_witness->ambient_vertex},
                            {"computed", bpg::to_json(e.edge_witness->computed)}};
    }
    std::cerr << bpg::dump_canonical(err);
    return kExitVerificationFailed;
  } catch (const bpg::PreconditionError& e) {
    json err = error_json("precondition", e.what());
    err["condition"] = e.condition;
    std::cerr << bpg::dump_canonical(err);
    return kExitVerificationFailed;
  } catch (const bpg::NotABisectionError& e) {
    std::cerr << bpg::dump_canonical(error_json("not_a_bisection", e.what()));
    return kExitVerificationFailed;
  } catch (const bpg::ParseError& e) {
    std::cerr << bpg::dump_canonical(error_json("input", e.what()));
    return kExitInputError;
  } catch (const bpg::InvalidGraphError& e) {
    std::cerr << bpg::dump_canonical(error_json("input", e.what()));
    return kExitInputError;
  } catch (const bpg::Error& e) {
    std::cerr << bpg::dump_canonical(error_json("error", e.what()));
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << bpg::dump_canonical(error_json("input", e.what()));
    return kExitInputError;
  }
  return kExitInputError;
}
