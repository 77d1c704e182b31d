"""Triangular-block certificates for planar Theta6 Turan bounds."""

import json as _json

from ._core import (
    PlaneGraph,
    TriblockError,
    extremal_graph,
    find_pattern,
    is_planar,
    parse_dot,
    parse_native,
    planar_embedding,
    skeleton,
)
from . import _core

__all__ = [
    "PlaneGraph",
    "TriblockError",
    "catalog",
    "certify",
    "decompose",
    "extremal_graph",
    "find_pattern",
    "is_planar",
    "max_edges",
    "parse_dot",
    "parse_native",
    "planar_embedding",
    "skeleton",
    "verify_extremal",
]


def decompose(pg):
    return _json.loads(_core._decompose_json(pg))


def certify(pg, target, check_free=False):
    return _json.loads(_core._certify_json(pg, target, check_free))


def max_edges(n, pattern, jobs=1):
    return _json.loads(_core._max_edges_json(n, pattern, jobs))


def verify_extremal(k):
    return _json.loads(_core._verify_extremal_json(k))


def catalog():
    return _json.loads(_core._catalog_json())
