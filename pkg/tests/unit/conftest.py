"""Unit tests configuration."""

import pytest

from graphprod_py import SimplicialGraph


@pytest.fixture(name="c4")
def c4_fx() -> SimplicialGraph:
    """Return the 4-cycle a-b-c-d-a (F2 x F2)."""
    return SimplicialGraph.build("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture(name="path3")
def path3_fx() -> SimplicialGraph:
    """Return the path a-b-c (Z x F2)."""
    return SimplicialGraph.build("abc", [("a", "b"), ("b", "c")])


@pytest.fixture(name="k2")
def k2_fx() -> SimplicialGraph:
    """Return a single edge (Z^2)."""
    return SimplicialGraph.build("ab", [("a", "b")])


@pytest.fixture(name="f2")
def f2_fx() -> SimplicialGraph:
    """Return two isolated vertices (F2)."""
    return SimplicialGraph.build("ab")


@pytest.fixture(name="octahedron")
def octahedron_fx() -> SimplicialGraph:
    """Return K_{2,2,2}, the join of three edgeless pairs."""
    parts = (("a1", "a2"), ("b1", "b2"), ("c1", "c2"))
    vertices = [v for part in parts for v in part]
    edges = [
        (u, v)
        for i, p in enumerate(parts)
        for q in parts[i + 1 :]
        for u in p
        for v in q
    ]
    return SimplicialGraph.build(vertices, edges)
