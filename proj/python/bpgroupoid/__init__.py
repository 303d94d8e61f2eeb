"""Compact-open bisection calculus for boundary path groupoids.

The heavy lifting happens in the C++ extension ``bpgroupoid._core``; this
package re-exports it and turns the JSON report strings into dicts.
"""

import json as _json

from ._core import (
    Bisection,
    CylinderSet,
    DckFamily,
    DirectedGraph,
    Error,
    GroupoidArrow,
    Path,
    RelationMorphism,
    Theta,
    bisection,
    boundary_paths,
    comparable,
    compose_families,
    concat,
    cylinder,
    edge_path,
    embed_identity,
    eval_bisection,
    eval_cylinder,
    family_from_json,
    family_to_json,
    family_to_relation,
    full_unit_space,
    graph_from_json,
    graph_to_json,
    identity_family,
    is_boundary_path,
    is_nondegenerate,
    is_prefix,
    materialize_groupoid,
    relation_from_json,
    relation_to_family,
    relation_to_json,
    search_inverse,
    vertex_path,
)
from ._core import (
    check_admissible_json as _check_admissible_json,
    oracle_check_json as _oracle_check_json,
    validate_relation_json as _validate_relation_json,
    verify_family_json as _verify_family_json,
    verify_inverse_json as _verify_inverse_json,
)

__all__ = [
    "Bisection",
    "CylinderSet",
    "DckFamily",
    "DirectedGraph",
    "Error",
    "GroupoidArrow",
    "Path",
    "RelationMorphism",
    "Theta",
    "bisection",
    "boundary_paths",
    "check_admissible",
    "comparable",
    "compose_families",
    "concat",
    "cylinder",
    "edge_path",
    "embed_identity",
    "eval_bisection",
    "eval_cylinder",
    "family_from_json",
    "family_to_json",
    "family_to_relation",
    "full_unit_space",
    "graph_from_json",
    "graph_to_json",
    "identity_family",
    "is_boundary_path",
    "is_nondegenerate",
    "is_prefix",
    "materialize_groupoid",
    "oracle_check",
    "relation_from_json",
    "relation_to_family",
    "relation_to_json",
    "search_inverse",
    "validate_relation",
    "verify_family",
    "verify_inverse",
    "vertex_path",
]


def verify_family(family):
    """Full verification report for a family, as a dict."""
    return _json.loads(_verify_family_json(family))


def validate_relation(relation):
    return _json.loads(_validate_relation_json(relation))


def check_admissible(relation):
    return _json.loads(_check_admissible_json(relation))


def verify_inverse(f, g):
    return _json.loads(_verify_inverse_json(f, g))


def oracle_check(seed, cases):
    return _json.loads(_oracle_check_json(seed, cases))
