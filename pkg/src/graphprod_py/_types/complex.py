"""Finite simplicial complexes over a canonically ordered vertex set."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from graphprod_py._types import errors

Simplex = tuple[str, ...]


@dataclass(slots=True, frozen=True)
class SimplicialComplex:
    """A face-closed set of simplices.

    Every simplex is a tuple sorted by the canonical vertex order, which also
    fixes its orientation. The empty simplex is never stored.
    """

    vertex_order: tuple[str, ...]
    """Canonical order of the ambient vertex set."""
    simplices: frozenset[Simplex]
    _rank: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        rank = {v: i for i, v in enumerate(self.vertex_order)}
        object.__setattr__(self, "_rank", rank)
        for simplex in self.simplices:
            if not simplex or len(set(simplex)) != len(simplex):
                msg = f"degenerate simplex {simplex!r}"
                raise errors.InvariantViolationError(msg)
            if any(v not in rank for v in simplex):
                raise errors.UnknownVertexError(f"simplex {simplex!r}")
            if list(simplex) != sorted(simplex, key=rank.__getitem__):
                msg = f"simplex {simplex!r} is not in canonical order"
                raise errors.InvariantViolationError(msg)
            if len(simplex) > 1:
                for face in combinations(simplex, len(simplex) - 1):
                    if face not in self.simplices:
                        msg = f"face {face!r} of {simplex!r} is missing"
                        raise errors.InvariantViolationError(msg)

    @classmethod
    def from_simplices(
        cls,
        vertex_order: Iterable[str],
        simplices: Iterable[Iterable[str]],
    ) -> "SimplicialComplex":
        """Build the smallest complex containing the given simplices."""
        order = tuple(vertex_order)
        rank = {v: i for i, v in enumerate(order)}
        closed: set[Simplex] = set()
        for raw in simplices:
            top = tuple(sorted(set(raw), key=rank.__getitem__))
            for k in range(1, len(top) + 1):
                closed.update(combinations(top, k))
        return cls(order, frozenset(closed))

    @property
    def dimension(self) -> int:
        """Largest simplex dimension; -1 for the empty complex."""
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    @property
    def vertices(self) -> tuple[str, ...]:
        present = {s[0] for s in self.simplices if len(s) == 1}
        return tuple(v for v in self.vertex_order if v in present)

    def of_dimension(self, k: int) -> list[Simplex]:
        """The k-simplices, sorted lexicographically by vertex rank."""
        rank = self._rank
        found = [s for s in self.simplices if len(s) == k + 1]
        return sorted(found, key=lambda s: [rank[v] for v in s])

    def count(self, k: int) -> int:
        return sum(1 for s in self.simplices if len(s) == k + 1)

    def full_subcomplex(self, keep: Iterable[str]) -> "SimplicialComplex":
        """The simplices all of whose vertices lie in ``keep``."""
        kept = set(keep)
        return SimplicialComplex(
            self.vertex_order,
            frozenset(s for s in self.simplices if kept.issuperset(s)),
        )

    def link(self, simplex: Iterable[str]) -> "SimplicialComplex":
        """Simplices disjoint from ``simplex`` whose join with it is a simplex."""
        base = set(simplex)
        rank = self._rank
        found = set()
        for s in self.simplices:
            if base.isdisjoint(s):
                joined = tuple(sorted(base.union(s), key=rank.__getitem__))
                if joined in self.simplices:
                    found.add(s)
        return SimplicialComplex(self.vertex_order, frozenset(found))

    def one_skeleton(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(s for s in self.simplices if len(s) == 2)
        return graph

    def __str__(self) -> str:
        lines = []
        for k in range(self.dimension + 1):
            lines.extend(" ".join(s) for s in self.of_dimension(k))
        return "\n".join(lines)
