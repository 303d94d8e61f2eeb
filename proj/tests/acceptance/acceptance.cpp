// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Usage: acceptance <cli-binary> <data-dir>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bpg/actor.hpp"
#include "bpg/io.hpp"
#include "bpg/oracle.hpp"
#include "bpg/random.hpp"
#include "bpg/relation.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace bpg;
using namespace bpg::tests;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& title, bool pass,
            const std::string& detail = "") {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title;
  if (!detail.empty())
    std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!pass)
    ++g_failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& cli, const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / "bpg_acceptance_out.txt";
  const auto err = dir / "bpg_acceptance_err.txt";
  const std::string cmd =
      cli + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WEXITSTATUS(status);
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

// criterion 1: the forward construction, through the API and bit-exactly
// through the CLI against the golden file
void criterion_1(const std::string& cli, const std::filesystem::path& data) {
  const auto start = Clock::now();
  auto g1 = gamma1();
  auto g2 = gamma2();
  const auto family = relation_to_family(example_relation(g1, g2));
  bool pass = family == forward_family(g1, g2);
  const auto report_f = verify_family(family);
  pass = pass && report_f.accepted() && report_f.nondegenerate;

  const auto tmp = std::filesystem::temp_directory_path() / "bpg_fwd.json";
  const auto r = run_cli(
      cli, "from-relation --graphs " + (data / "gamma1.json").string() + " " +
               (data / "gamma2.json").string() + " --relation " +
               (data / "example_relation.json").string() + " --out " + tmp.string());
  pass = pass && r.exit_code == 0;
  pass = pass && slurp(tmp) == slurp(data / "forward_family.json");
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 1.0;
  report(1, "forward construction matches the worked example", pass,
         "elapsed " + std::to_string(elapsed) + "s");
}

// criterion 2: the inverse family verifies, is nondegenerate, and inverts
// the forward family (both composites equal the identity families)
void criterion_2() {
  const auto start = Clock::now();
  auto g1 = gamma1();
  auto g2 = gamma2();
  const auto inv = inverse_family(g1, g2);
  const auto fwd = forward_family(g1, g2);
  const auto rep = verify_family(inv);
  bool pass = rep.accepted() && rep.nondegenerate;
  const auto inverse = verify_inverse(inv, fwd);
  pass = pass && inverse.inverse && inverse.left_composite_matches &&
         inverse.right_composite_matches;
  const double elapsed = seconds_since(start);
  pass = pass && elapsed < 1.0;
  report(2, "inverse family verifies and inverts the forward family", pass,
         "elapsed " + std::to_string(elapsed) + "s");
}

// criterion 3: to-relation rejects the inverse family at (5.3.1) with the
// exact witness (v2, u2) and computed set Z_{f1}
void criterion_3(const std::string& cli, const std::filesystem::path& data) {
  auto g1 = gamma1();
  auto g2 = gamma2();
  bool pass = false;
  std::string detail;
  try {
    family_to_relation(inverse_family(g1, g2));
    detail = "no error raised";
  } catch (const CompatibilityError& e) {
    pass = e.condition == "5.3.1" && e.vertex_witness.has_value() &&
           e.vertex_witness->ambient_vertex == "v2" &&
           e.vertex_witness->source_vertex == "u2" &&
           e.vertex_witness->computed == cyl(g2, {epath(g2, {"f1"})});
  }

  const auto r = run_cli(cli, "to-relation --graphs " +
                                  (data / "gamma1.json").string() + " " +
                                  (data / "gamma2.json").string() + " --family " +
                                  (data / "inverse_family.json").string());
  pass = pass && r.exit_code == 1;
  const auto err = json::parse(r.err);
  pass = pass && err.at("condition") == "(5.3.1)" &&
         err.at("witness").at("ambient_vertex") == "v2" &&
         err.at("witness").at("source_vertex") == "u2" &&
         err.at("witness").at("computed").at("paths") ==
             json::array({json{{"edges", {"f1"}}}});
  report(3, "inverse family is rejected at (5.3.1) with the exact witness", pass,
         detail);
}

// criterion 4: symbolic shift algebra agrees with the setwise oracle on
// at least 500 random acyclic graphs
void criterion_4() {
  const auto start = Clock::now();
  const auto summary = oracle_check(0xacce97ed, 500);
  const double elapsed = seconds_since(start);
  const bool pass = summary.discrepancies == 0 && summary.cases >= 500 &&
                    elapsed < 60.0;
  report(4, "oracle equivalence on 500 random acyclic graphs", pass,
         std::to_string(summary.discrepancies) + " discrepancies, elapsed " +
             std::to_string(elapsed) + "s");
}

// criterion 5: algebraic laws on graphs with cycles, 500 randomized cases
void criterion_5() {
  Rng rng(0x1a35);
  int checked = 0;
  int failures = 0;
  int cyclic_seen = 0;
  while (checked < 500) {
    auto g = random_graph(rng, 4, 8, false, "c" + std::to_string(checked));
    if (!g->is_acyclic())
      ++cyclic_seen;
    const auto a = random_bisection(rng, g, 3, 3);
    const auto b = random_bisection(rng, g, 3, 3);
    const auto c = random_bisection(rng, g, 3, 3);
    const auto s = random_cylinder(rng, g, 4, 3);
    const auto t = random_cylinder(rng, g, 4, 3);

    if (!(a.product(b).product(c) == a.product(b.product(c))))
      ++failures;
    if (!(a.inverse().inverse() == a))
      ++failures;
    if (!(a.product(a.inverse()).product(a) == a))
      ++failures;
    if (!(embed_identity(a.range_set()).product(a) == a))
      ++failures;
    if (!(a.product(embed_identity(a.source_set())) == a))
      ++failures;
    if (!(a.product(a.inverse()) == embed_identity(a.range_set())))
      ++failures;
    if (!(s.union_with(t) == t.union_with(s)))
      ++failures;
    if (!(s.difference(s.difference(t)) == s.intersection(t)))
      ++failures;
    if (!(s.union_with(s.intersection(t)) == s))
      ++failures;
    ++checked;
  }
  const bool pass = failures == 0 && checked >= 500 && cyclic_seen > 50;
  report(5, "algebraic laws on cyclic graphs (500 cases)", pass,
         std::to_string(failures) + " failures, " + std::to_string(cyclic_seen) +
             " cyclic graphs");
}

// criterion 6: both round trips on at least 200 randomized admissible
// relations
void criterion_6() {
  Rng rng(0x0707);
  int accepted = 0;
  int failures = 0;
  int attempts = 0;
  while (accepted < 120 && attempts < 100000) {
    ++attempts;
    auto g1 = random_graph(rng, 4, 5, chance(rng, 0.5), "a");
    auto g2 = random_graph(rng, 3, 4, chance(rng, 0.5), "b");
    auto candidate = random_relation_candidate(rng, g1, g2, 2);
    if (!candidate || !validate_relation(*candidate).valid ||
        !check_admissible(*candidate).admissible())
      continue;
    ++accepted;
    const auto family = relation_to_family(*candidate);
    const auto back = family_to_relation(family);
    if (!(back == *candidate))
      ++failures;
    if (!(relation_to_family(back) == family))
      ++failures;
  }
  // quotient-built relations exercise the nondegenerate corner
  int quotient_attempts = 0;
  while (accepted < 200 && quotient_attempts < 100000) {
    ++quotient_attempts;
    auto g1 = random_graph(rng, 4, 6, chance(rng, 0.5), "q");
    auto q = random_quotient_relation(rng, g1, "t");
    if (!q || !check_admissible(q->relation).admissible())
      continue;
    ++accepted;
    const auto family = relation_to_family(q->relation);
    const auto back = family_to_relation(family);
    if (!(back == q->relation))
      ++failures;
    if (!(relation_to_family(back) == family))
      ++failures;
  }
  const bool pass = accepted >= 200 && failures == 0;
  report(6, "round trips on 200 randomized admissible relations", pass,
         std::to_string(accepted) + " relations, " + std::to_string(failures) +
             " failures");
}

// criterion 7: category laws for composition on randomized composable
// triples of verified nondegenerate families
void criterion_7() {
  Rng rng(0xca7);
  int cases = 0;
  int failures = 0;
  int attempts = 0;
  auto g1 = gamma1();
  auto g2 = gamma2();
  while (cases < 100 && attempts < 100000) {
    ++attempts;
    DckFamily f1, f2, f3;
    if (cases % 10 == 0) {
      // seed the pool with the worked example pair
      f1 = forward_family(g1, g2);
      f2 = inverse_family(g1, g2);
      f3 = forward_family(g1, g2);
    } else {
      auto q_graph = random_graph(rng, 4, 5, chance(rng, 0.4), "q");
      auto r3 = random_quotient_relation(rng, q_graph, "w");
      if (!r3)
        continue;
      auto r2 = random_quotient_relation(rng, r3->target, "x");
      if (!r2)
        continue;
      auto r1 = random_quotient_relation(rng, r2->target, "y");
      if (!r1)
        continue;
      f3 = relation_to_family(r3->relation);
      f2 = relation_to_family(r2->relation);
      f1 = relation_to_family(r1->relation);
    }
    ++cases;
    const auto left = compose_families(compose_families(f1, f2), f3);
    const auto right = compose_families(f1, compose_families(f2, f3));
    if (!(left == right))
      ++failures;
    const auto rep = verify_family(left);
    if (!rep.accepted() || !rep.nondegenerate)
      ++failures;
    if (!(compose_families(f1, identity_family(f1.ambient_graph)) == f1))
      ++failures;
    if (!(compose_families(identity_family(f1.source_graph), f1) == f1))
      ++failures;
  }
  const bool pass = cases >= 100 && failures == 0;
  report(7, "category laws on 100 composable triples", pass,
         std::to_string(cases) + " triples, " + std::to_string(failures) +
             " failures");
}

// criterion 8: both example groupoids materialize to 9 arrows over 3 units
void criterion_8() {
  bool pass = true;
  for (auto g : {gamma1(), gamma2()}) {
    const auto arrows = materialize_groupoid(g);
    int units = 0;
    for (const auto& a : arrows)
      if (a.range_path == a.source_path && a.offset == 0)
        ++units;
    pass = pass && arrows.size() == 9 && units == 3;
  }
  report(8, "example groupoids have 9 arrows over 3 units", pass);
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path data = argv[2];

  criterion_1(cli, data);
  criterion_2();
  criterion_3(cli, data);
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  if (g_failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << g_failures << " acceptance criteria failed\n";
  return g_failures == 0 ? 0 : 1;
}
