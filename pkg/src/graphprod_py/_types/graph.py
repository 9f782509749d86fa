"""Defining graphs of graph products of cyclic groups."""

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field

import networkx as nx

from graphprod_py._types import errors
from graphprod_py._types.complex import SimplicialComplex

INFINITE = 0
"""Order of an infinite cyclic vertex group (also its abelianization modulus)."""

_RESERVED = frozenset("^=,#")


def valid_vertex_name(name: str) -> bool:
    """Names are nonempty, not `1`, free of whitespace and of `^=,#`."""
    if not name or name == "1":
        return False
    return not _RESERVED.intersection(name) and not any(c.isspace() for c in name)


class GroupKind(enum.Enum):
    RAAG = "RAAG"
    RACG = "RACG"
    GRAPH_PRODUCT = "graph product"


@dataclass(slots=True, frozen=True)
class SimplicialGraph:
    """A finite simplicial graph with a cyclic group at each vertex.

    The declaration order of ``vertices`` is the canonical total order used for
    normal-form tie-breaking and for simplex orientation.
    """

    vertices: tuple[str, ...]
    orders: tuple[int, ...]
    """Vertex group orders, aligned with ``vertices``; ``INFINITE`` (0) for ℤ."""
    edges: frozenset[frozenset[str]]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)
    _neighbors: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        if len(self.orders) != len(self.vertices):
            msg = "one order per vertex is required"
            raise errors.InvalidGraphError(msg)
        index: dict[str, int] = {}
        for i, name in enumerate(self.vertices):
            if not valid_vertex_name(name):
                raise errors.InvalidGraphError(f"invalid vertex name {name!r}")
            if name in index:
                raise errors.DuplicateVertexError("duplicate vertex", token=name)
            index[name] = i
        for order in self.orders:
            if order != INFINITE and order < 2:
                msg = f"vertex order must be >= 2 or infinite, got {order}"
                raise errors.InvalidOrderError(msg, token=str(order))
        neighbors: dict[str, set[str]] = {v: set() for v in self.vertices}
        for edge in self.edges:
            if len(edge) != 2:
                raise errors.InvalidGraphError(f"self-loop or bad edge {set(edge)}")
            u, v = tuple(edge)
            if u not in index or v not in index:
                raise errors.UnknownVertexError(f"edge {u}-{v}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        object.__setattr__(self, "_index", index)
        object.__setattr__(
            self, "_neighbors", {v: frozenset(n) for v, n in neighbors.items()}
        )

    @classmethod
    def build(
        cls,
        vertices: Iterable[str],
        edges: Iterable[tuple[str, str]] = (),
        orders: Mapping[str, int] | None = None,
    ) -> "SimplicialGraph":
        """Build a graph; vertices missing from ``orders`` are infinite cyclic.

        >>> SimplicialGraph.build("abc", [("a", "b"), ("b", "c")]).kind.value
        'RAAG'
        """
        names = tuple(vertices)
        orders = orders or {}
        seen: set[frozenset[str]] = set()
        for u, v in edges:
            if u == v:
                raise errors.InvalidGraphError(f"self-loop at {u}")
            edge = frozenset((u, v))
            if edge in seen:
                raise errors.DuplicateEdgeError("duplicate edge", token=f"{u} {v}")
            seen.add(edge)
        return cls(
            names,
            tuple(orders.get(v, INFINITE) for v in names),
            frozenset(seen),
        )

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._index

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise errors.UnknownVertexError(f"unknown vertex {vertex!r}") from None

    def order(self, vertex: str) -> int:
        return self.orders[self.index(vertex)]

    def adjacent(self, u: str, v: str) -> bool:
        return v in self._neighbors[u]

    def neighbors(self, vertex: str) -> frozenset[str]:
        self.index(vertex)
        return self._neighbors[vertex]

    def ordered(self, subset: Iterable[str]) -> tuple[str, ...]:
        """Sort a vertex subset by the canonical order."""
        return tuple(sorted(subset, key=self.index))

    @property
    def kind(self) -> GroupKind:
        if all(o == INFINITE for o in self.orders):
            return GroupKind.RAAG
        if all(o == 2 for o in self.orders):
            return GroupKind.RACG
        return GroupKind.GRAPH_PRODUCT

    @property
    def moduli(self) -> tuple[int, ...]:
        """Abelianization moduli per vertex (0 = free)."""
        return self.orders

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(tuple(e) for e in self.edges)
        return graph

    def induced_subgraph(self, keep: Iterable[str]) -> "SimplicialGraph":
        kept = set(keep)
        for v in kept:
            self.index(v)
        names = tuple(v for v in self.vertices if v in kept)
        return SimplicialGraph(
            names,
            tuple(self.order(v) for v in names),
            frozenset(e for e in self.edges if e <= kept),
        )

    def render_subset(self, subset: Iterable[str]) -> str:
        return "{" + ",".join(self.ordered(subset)) + "}"

    def __str__(self) -> str:
        lines = []
        for v, order in zip(self.vertices, self.orders):
            lines.append(f"vertex {v} order {'inf' if order == INFINITE else order}")
        for u, v in sorted(self.ordered(e) for e in self.edges):
            lines.append(f"edge {u} {v}")
        return "\n".join(lines)


@dataclass(slots=True, frozen=True)
class JoinDecomposition:
    """Join factors of Γ, i.e. the direct factors of the graph product."""

    factors: tuple[frozenset[str], ...]
    """Connected components of the complement graph, by first vertex."""
    central: frozenset[str]
    """Vertices adjacent to every other vertex (singleton factors)."""

    @property
    def non_central(self) -> tuple[frozenset[str], ...]:
        return tuple(f for f in self.factors if not f <= self.central)


def complement(g: SimplicialGraph) -> SimplicialGraph:
    """Same vertices and orders, complementary edge set."""
    comp = nx.complement(g.to_networkx())
    return SimplicialGraph(
        g.vertices,
        g.orders,
        frozenset(frozenset(e) for e in comp.edges),
    )


def join_factors(g: SimplicialGraph) -> JoinDecomposition:
    """Decompose Γ as a join of subgraphs that are not themselves joins.

    Raises:
        EmptyGraphError: If the graph has no vertices.
    """
    if not g.vertices:
        raise errors.EmptyGraphError("the graph has no vertices")
    comp = complement(g).to_networkx()
    factors = sorted(
        (frozenset(c) for c in nx.connected_components(comp)),
        key=lambda f: min(g.index(v) for v in f),
    )
    central = frozenset(v for f in factors if len(f) == 1 for v in f)
    return JoinDecomposition(tuple(factors), central)


def link(g: SimplicialGraph, v: str) -> frozenset[str]:
    return g.neighbors(v)


def star(g: SimplicialGraph, v: str) -> frozenset[str]:
    return g.neighbors(v) | {v}


def flag_complex(g: SimplicialGraph) -> SimplicialComplex:
    """The clique complex of Γ: one simplex per nonempty clique."""
    cliques = nx.enumerate_all_cliques(g.to_networkx())
    return SimplicialComplex(
        g.vertices,
        frozenset(g.ordered(c) for c in cliques),
    )
