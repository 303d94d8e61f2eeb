"""Smoke tests for the python binding: the worked example end to end."""

import json

import pytest

import bpgroupoid as bpg


@pytest.fixture
def gamma1():
    return bpg.DirectedGraph(
        "gamma1", ["u1", "u2", "u3"], [("e1", "u1", "u2"), ("e2", "u2", "u3")]
    )


@pytest.fixture
def gamma2():
    return bpg.DirectedGraph(
        "gamma2", ["v1", "v2"], [("f1", "v1", "v2"), ("f2", "v1", "v2")]
    )


def test_graph_basics(gamma1):
    assert gamma1.vertices == ["u1", "u2", "u3"]
    assert gamma1.regular_vertices == ["u2", "u3"]
    assert gamma1.is_acyclic()
    assert [str(p) for p in map(repr, bpg.boundary_paths(gamma1))] == [
        "Path(u1)",
        "Path(e1)",
        "Path(e2.e1)",
    ]


def test_path_algebra(gamma1):
    e1 = bpg.edge_path(gamma1, ["e1"])
    e2 = bpg.edge_path(gamma1, ["e2"])
    e2e1 = bpg.concat(e2, e1)
    assert e2e1.length == 2
    assert e2e1.range == "u3"
    assert e2e1.source == "u1"
    assert bpg.is_prefix(e2, e2e1)
    assert not bpg.is_prefix(e1, e2e1)
    assert bpg.is_boundary_path(e2e1)
    with pytest.raises(bpg.Error):
        bpg.concat(e1, e2)


def test_cylinder_contraction(gamma2):
    f1 = bpg.edge_path(gamma2, ["f1"])
    f2 = bpg.edge_path(gamma2, ["f2"])
    v2 = bpg.vertex_path(gamma2, "v2")
    assert bpg.cylinder(gamma2, [f1, f2]) == bpg.cylinder(gamma2, [v2])
    assert bpg.full_unit_space(gamma2).generators == [
        bpg.vertex_path(gamma2, "v1"),
        v2,
    ]


def test_example_pipeline(gamma1, gamma2):
    relation = bpg.RelationMorphism(
        gamma1,
        gamma2,
        [("u1", "v1"), ("u2", "v2"), ("u3", "v2")],
        [
            (bpg.edge_path(gamma1, ["e2", "e1"]), "f2"),
            (bpg.edge_path(gamma1, ["e1"]), "f1"),
        ],
    )
    assert bpg.validate_relation(relation)["valid"]
    assert bpg.check_admissible(relation)["admissible"]

    family = bpg.relation_to_family(relation)
    report = bpg.verify_family(family)
    assert report["accepted"]
    assert report["nondegenerate"]
    assert report["compat_531"]["pass"]
    assert report["compat_532"]["pass"]

    # the round trip recovers the same relation
    assert bpg.family_to_relation(family) == relation

    # the induced family is invertible; the search finds the inverse
    inverse = bpg.search_inverse(family, max_len=2)
    assert inverse is not None
    assert bpg.verify_inverse(inverse, family)["inverse"]
    assert bpg.compose_families(family, inverse) == bpg.identity_family(gamma2)
    assert bpg.compose_families(inverse, family) == bpg.identity_family(gamma1)


def test_inverse_family_rejection(gamma1, gamma2):
    v1 = bpg.vertex_path(gamma2, "v1")
    f1 = bpg.edge_path(gamma2, ["f1"])
    f2 = bpg.edge_path(gamma2, ["f2"])
    inverse = bpg.DckFamily(
        gamma1,
        gamma2,
        {
            "u1": bpg.cylinder(gamma2, [v1]),
            "u2": bpg.cylinder(gamma2, [f1]),
            "u3": bpg.cylinder(gamma2, [f2]),
        },
        {
            "e1": bpg.bisection(gamma2, [(f1, v1)]),
            "e2": bpg.bisection(gamma2, [(f2, f1)]),
        },
    )
    report = bpg.verify_family(inverse)
    assert report["accepted"] and report["nondegenerate"]
    assert not report["compat_531"]["pass"]
    witness = report["compat_531"]["failures"][0]
    assert (witness["ambient_vertex"], witness["source_vertex"]) == ("v2", "u2")
    with pytest.raises(bpg.Error, match="5.3.1"):
        bpg.family_to_relation(inverse)


def test_groupoid_materialization(gamma1, gamma2):
    for g in (gamma1, gamma2):
        arrows = bpg.materialize_groupoid(g)
        assert len(arrows) == 9
        units = [a for a in arrows if a.offset == 0 and a.range_path == a.source_path]
        assert len(units) == 3


def test_json_round_trip(gamma1, gamma2):
    family = bpg.identity_family(gamma2)
    text = bpg.family_to_json(family)
    parsed = json.loads(text)
    assert parsed["source_graph"] == "gamma2"
    assert bpg.family_from_json(text, gamma2, gamma2) == family


def test_oracle_check():
    summary = bpg.oracle_check(seed=3, cases=25)
    assert summary["discrepancies"] == 0
