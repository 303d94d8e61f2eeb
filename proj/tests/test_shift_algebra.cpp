#include <doctest.h>

#include "bpg/bisection.hpp"
#include "bpg/cylinder.hpp"
#include "bpg/oracle.hpp"
#include "support/fixtures.hpp"

using namespace bpg;
using namespace bpg::tests;

TEST_CASE("cylinder canonicalization contracts complete child families") {
  auto g1 = gamma1();
  auto g2 = gamma2();

  // Z_{f1} + Z_{f2} = Z_{v2} on gamma2
  const auto contracted = cyl(g2, {epath(g2, {"f1"}), epath(g2, {"f2"})});
  CHECK(contracted == cyl(g2, {vpath(g2, "v2")}));
  CHECK(oracle_equal(contracted,
                     eval_cylinder(cyl(g2, {epath(g2, {"f1"}), epath(g2, {"f2"})}))));

  // duplicates drop and e2.e1 contracts through e2 to u3
  const auto chained =
      cyl(g1, {vpath(g1, "u1"), epath(g1, {"e2", "e1"}), vpath(g1, "u1")});
  CHECK(chained == cyl(g1, {vpath(g1, "u1"), vpath(g1, "u3")}));

  CHECK(CylinderSet::canonicalize(g1, {}).is_empty());
}

TEST_CASE("cylinder union") {
  auto g1 = gamma1();
  auto g2 = gamma2();

  // omega[v2] of the worked example: Z_{u2} + Z_{u3}
  const auto u2 = cyl(g1, {vpath(g1, "u2")});
  const auto u3 = cyl(g1, {vpath(g1, "u3")});
  CHECK(u2.union_with(u3) == cyl(g1, {vpath(g1, "u2"), vpath(g1, "u3")}));

  const auto s = cyl(g1, {epath(g1, {"e1"})});
  CHECK(s.union_with(CylinderSet::empty(g1)) == s);

  CHECK(cyl(g2, {epath(g2, {"f1"})}).union_with(cyl(g2, {epath(g2, {"f2"})})) ==
        cyl(g2, {vpath(g2, "v2")}));

  CHECK_THROWS_AS(u2.union_with(cyl(g2, {vpath(g2, "v1")})), GraphMismatchError);
}

TEST_CASE("cylinder difference, intersection, subset") {
  auto g1 = gamma1();
  auto g2 = gamma2();

  const auto v2 = cyl(g2, {vpath(g2, "v2")});
  const auto f1 = cyl(g2, {epath(g2, {"f1"})});
  const auto f2 = cyl(g2, {epath(g2, {"f2"})});
  CHECK(v2.difference(f1) == f2);
  CHECK(oracle_equal(v2.difference(f1),
                     set_difference(eval_cylinder(v2), eval_cylinder(f1))));

  CHECK(v2.difference(v2).is_empty());

  const auto u1 = cyl(g1, {vpath(g1, "u1")});
  const auto u2 = cyl(g1, {vpath(g1, "u2")});
  CHECK(u1.difference(u2) == u1); // incomparable generators are disjoint

  // equality after canonicalization
  CHECK(cyl(g2, {epath(g2, {"f1"}), epath(g2, {"f2"})}) == v2);
  CHECK(CylinderSet::empty(g1).subset_of(u1));
  CHECK(u2.subset_of(cyl(g1, {vpath(g1, "u2"), vpath(g1, "u3")})));
  CHECK(!cyl(g1, {vpath(g1, "u2"), vpath(g1, "u3")}).subset_of(u2));
}

TEST_CASE("full unit space") {
  auto g1 = gamma1();
  auto g2 = gamma2();
  CHECK(full_unit_space(g1) ==
        cyl(g1, {vpath(g1, "u1"), vpath(g1, "u2"), vpath(g1, "u3")}));
  CHECK(full_unit_space(g2) == cyl(g2, {vpath(g2, "v1"), vpath(g2, "v2")}));
  auto empty = DirectedGraph::make({"empty", {}, {}});
  CHECK(full_unit_space(empty).is_empty());
}

TEST_CASE("bisection canonicalization") {
  auto g1 = gamma1();
  auto g2 = gamma2();

  // (e2.e1, e1) is the complete child family of (e2, u2)
  const auto b = Bisection::canonicalize(
      g1, {{epath(g1, {"e2", "e1"}), epath(g1, {"e1"})}});
  CHECK(b == Bisection::basic(epath(g1, {"e2"}), vpath(g1, "u2")));
  CHECK(eval_bisection(b) ==
        eval_bisection(Bisection::basic(epath(g1, {"e2", "e1"}), epath(g1, {"e1"}))));

  CHECK(Bisection::canonicalize(g1, {}).is_empty());

  // both basics have source cylinder Z_{v1}: not a bisection
  CHECK_THROWS_AS(Bisection::canonicalize(g2, {{epath(g2, {"f1"}), vpath(g2, "v1")},
                                               {epath(g2, {"f2"}), vpath(g2, "v1")}}),
                  NotABisectionError);
  try {
    Bisection::canonicalize(g2, {{epath(g2, {"f1"}), vpath(g2, "v1")},
                                 {epath(g2, {"f2"}), vpath(g2, "v1")}});
  } catch (const NotABisectionError& e) {
    CHECK(e.side == "source");
  }
}

TEST_CASE("bisection product") {
  auto g1 = gamma1();
  auto g2 = gamma2();

  const auto left = Bisection::basic(epath(g2, {"f2"}), epath(g2, {"f1"}));
  const auto right = Bisection::basic(epath(g2, {"f1"}), vpath(g2, "v1"));
  const auto prod = left.product(right);
  CHECK(prod == Bisection::basic(epath(g2, {"f2"}), vpath(g2, "v1")));
  CHECK(eval_bisection(prod) ==
        arrow_product(eval_bisection(left), eval_bisection(right)));

  // Z(u1,e1) . Z(e1,u1) is the identity bisection on Z_{u1}
  const auto a = Bisection::basic(vpath(g1, "u1"), epath(g1, {"e1"}));
  const auto b = Bisection::basic(epath(g1, {"e1"}), vpath(g1, "u1"));
  CHECK(a.product(b) == Bisection::basic(vpath(g1, "u1"), vpath(g1, "u1")));

  // incomparable supports give the empty bisection
  const auto c = Bisection::basic(epath(g1, {"e1"}), vpath(g1, "u1"));
  const auto d = Bisection::basic(epath(g1, {"e2"}), vpath(g1, "u2"));
  CHECK(c.product(d).is_empty());
}

TEST_CASE("bisection inverse") {
  auto g1 = gamma1();
  const auto b = Bisection::basic(epath(g1, {"e1"}), vpath(g1, "u1"));
  CHECK(b.inverse() == Bisection::basic(vpath(g1, "u1"), epath(g1, {"e1"})));
  CHECK(Bisection::empty(g1).inverse().is_empty());
  CHECK(b.inverse().inverse() == b);
}

TEST_CASE("bisection range and source") {
  auto g1 = gamma1();
  const auto b = Bisection::basic(epath(g1, {"e2", "e1"}), vpath(g1, "u1"));
  CHECK(b.range_set() == cyl(g1, {vpath(g1, "u3")})); // contracts to Z_{u3}
  CHECK(b.source_set() == cyl(g1, {vpath(g1, "u1")}));
  CHECK(Bisection::empty(g1).range_set().is_empty());
}

TEST_CASE("bisection union") {
  auto g2 = gamma2();
  const auto a = Bisection::basic(epath(g2, {"f1"}), vpath(g2, "v1"));
  const auto b = Bisection::basic(epath(g2, {"f2"}), epath(g2, {"f1"}));
  const auto u = a.union_with(b);
  CHECK(u.generators().size() == 2);
  CHECK(eval_bisection(u) == arrow_union(eval_bisection(a), eval_bisection(b)));

  CHECK(a.union_with(Bisection::empty(g2)) == a);

  const auto clash = Bisection::basic(epath(g2, {"f2"}), vpath(g2, "v1"));
  CHECK_THROWS_AS(a.union_with(clash), NotABisectionError);
}

TEST_CASE("embed identity") {
  auto g1 = gamma1();
  auto g2 = gamma2();
  const auto z = cyl(g1, {vpath(g1, "u1")});
  CHECK(embed_identity(z) == Bisection::basic(vpath(g1, "u1"), vpath(g1, "u1")));
  CHECK(embed_identity(CylinderSet::empty(g1)).is_empty());

  const auto unit = embed_identity(full_unit_space(g2));
  CHECK(unit.generators().size() == 2);
  CHECK(unit.range_set() == full_unit_space(g2));
}
