"""Living subcomplexes, Σ¹ and finiteness types of kernels of characters."""

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import Any

from loguru import logger

from graphprod_py._homology import is_k_acyclic, is_simply_connected
from graphprod_py._types import errors
from graphprod_py._types.complex import SimplicialComplex
from graphprod_py._types.graph import INFINITE, SimplicialGraph, flag_complex
from graphprod_py._types.lattice import Vector, rational_rank
from graphprod_py._types.records import Answer, TietzeBudget


@dataclass(slots=True, frozen=True)
class Character:
    """A homomorphism 𝒢 → ℤʳ given by its values on the vertex generators."""

    graph: SimplicialGraph
    values: tuple[Vector, ...]
    """χ(v) per vertex, aligned with ``graph.vertices``."""
    rank: int

    def __post_init__(self) -> None:
        if self.rank < 0 or len(self.values) != len(self.graph):
            raise errors.DimensionMismatchError("one value per vertex is required")
        for vertex, value in zip(self.graph.vertices, self.values):
            if len(value) != self.rank:
                msg = f"value of {vertex} must have {self.rank} entries"
                raise errors.InvalidCharacterError(msg, token=vertex)
            if self.graph.order(vertex) != INFINITE and any(value):
                msg = "a finite cyclic vertex group only maps to 0"
                raise errors.InvalidCharacterError(msg, token=vertex)

    @classmethod
    def from_mapping(
        cls,
        graph: SimplicialGraph,
        values: Mapping[str, int | Sequence[int]],
        rank: int | None = None,
    ) -> "Character":
        """Build from ``{vertex: value}``; unlisted vertices map to 0.

        Integer values give a rank-1 character.
        """
        vectors = {
            v: (x,) if isinstance(x, int) else tuple(int(y) for y in x)
            for v, x in values.items()
        }
        for vertex in vectors:
            graph.index(vertex)
        if rank is None:
            rank = len(next(iter(vectors.values()))) if vectors else 1
        zero = (0,) * rank
        return cls(graph, tuple(vectors.get(v, zero) for v in graph.vertices), rank)

    def value(self, vertex: str) -> Vector:
        return self.values[self.graph.index(vertex)]

    @property
    def is_zero(self) -> bool:
        return not any(any(v) for v in self.values)

    @property
    def dead(self) -> frozenset[str]:
        """Vertices on which χ vanishes."""
        return frozenset(
            v for v, value in zip(self.graph.vertices, self.values) if not any(value)
        )

    def scaled(self, factor: int) -> "Character":
        return Character(
            self.graph,
            tuple(tuple(factor * x for x in value) for value in self.values),
            self.rank,
        )

    def __call__(self, exponents: Sequence[int]) -> Vector:
        """χ of an abelianized word."""
        return tuple(
            sum(e * value[i] for e, value in zip(exponents, self.values))
            for i in range(self.rank)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "values": {v: list(x) for v, x in zip(self.graph.vertices, self.values)},
        }

    def __str__(self) -> str:
        if self.rank == 1:
            return ",".join(
                f"{v}={x[0]}" for v, x in zip(self.graph.vertices, self.values)
            )
        return "; ".join(
            f"{v}=({','.join(map(str, x))})"
            for v, x in zip(self.graph.vertices, self.values)
        )


@dataclass(slots=True, frozen=True)
class DeadSetFamily:
    """Dead sets {v : u·χ(v) = 0} over all nonzero directions u."""

    graph: SimplicialGraph
    sets: tuple[frozenset[str], ...]

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(slots=True, frozen=True)
class FinitenessVerdict:
    """FP_n / F_n of ker χ; F is three-valued and never exceeds FP."""

    n: int
    fp: Answer
    f: Answer
    dead_sets: int
    """Number of realizable dead sets examined."""
    witness: frozenset[str] | None = None
    """A dead set whose living data fails the FP_n condition."""

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "FP": self.fp.value,
            "F": self.f.value,
            "dead_sets": self.dead_sets,
            "witness": sorted(self.witness) if self.witness is not None else None,
        }


def _check_dead(g: SimplicialGraph, dead: Iterable[str]) -> frozenset[str]:
    dead = frozenset(dead)
    for v in dead:
        g.index(v)
    return dead


def living_subcomplex(g: SimplicialGraph, dead: Iterable[str]) -> SimplicialComplex:
    """Full subcomplex of the flag complex on the living vertices."""
    dead = _check_dead(g, dead)
    return flag_complex(g).full_subcomplex(v for v in g.vertices if v not in dead)


def _conditions(
    g: SimplicialGraph, dead: frozenset[str], n: int
) -> Iterator[tuple[SimplicialComplex, int]]:
    """Pairs (living complex, degree) that must be acyclic for domination.

    The living subcomplex must be (n-1)-acyclic, and the living link of every
    dead simplex σ must be (n-2-dim σ)-acyclic.
    """
    flag = flag_complex(g)
    living = [v for v in g.vertices if v not in dead]
    yield flag.full_subcomplex(living), n - 1
    for sigma in sorted(flag.simplices, key=lambda s: (len(s), [g.index(v) for v in s])):
        degree = n - 2 - (len(sigma) - 1)
        if degree < -1:
            break
        if dead.issuperset(sigma):
            yield flag.link(sigma).full_subcomplex(living), degree


def is_acyclic_dominating(g: SimplicialGraph, dead: Iterable[str], n: int) -> bool:
    """The (n-1)-ℤ-acyclic dominating condition for a dead set.

    >>> g = SimplicialGraph.build("ab", [("a", "b")])
    >>> is_acyclic_dominating(g, {"b"}, 3)
    True
    """
    if n < 0:
        raise errors.PreconditionError("n must be nonnegative")
    dead = _check_dead(g, dead)
    return all(is_k_acyclic(c, k) for c, k in _conditions(g, dead, n))


def is_connected_dominating(
    g: SimplicialGraph,
    dead: Iterable[str],
    n: int,
    budget: TietzeBudget | None = None,
) -> Answer:
    """Homotopical counterpart: acyclicity plus simple connectivity in degrees ≥ 1."""
    dead = _check_dead(g, dead)
    answer = Answer.YES
    for complex_, degree in _conditions(g, dead, n):
        if not is_k_acyclic(complex_, degree):
            return Answer.NO
        if degree >= 1:
            match is_simply_connected(complex_, budget):
                case Answer.NO:
                    return Answer.NO
                case Answer.UNKNOWN:
                    answer = Answer.UNKNOWN
    return answer


def sigma1_contains(chi: Character) -> bool:
    """Whether [χ] ∈ Σ¹ for a rank-1 character.

    Raises:
        ZeroCharacterError: If χ vanishes identically.
    """
    if chi.rank != 1:
        raise errors.DimensionMismatchError("sigma1_contains needs a rank-1 character")
    if chi.is_zero:
        raise errors.ZeroCharacterError("the character is identically zero")
    return is_acyclic_dominating(chi.graph, chi.dead, 1)


def realizable_dead_sets(chi: Character) -> DeadSetFamily:
    """Dead sets D_W = {v : χ(v) ∈ W} for flats W properly inside span χ(V).

    Every such W is spanned by fewer than dim span χ(V) character values.
    """
    g = chi.graph
    distinct = sorted({value for value in chi.values if any(value)})
    total = rational_rank(distinct, chi.rank) if distinct else 0
    found: set[frozenset[str]] = set()
    for size in range(total):
        for basis in combinations(distinct, size):
            base_rank = rational_rank(basis, chi.rank) if basis else 0
            found.add(
                frozenset(
                    v
                    for v, value in zip(g.vertices, chi.values)
                    if not any(value)
                    or (basis and rational_rank(basis + (value,), chi.rank) == base_rank)
                )
            )
    ordered = sorted(found, key=lambda d: (len(d), [g.index(v) for v in g.ordered(d)]))
    logger.debug("{} realizable dead sets", len(ordered))
    return DeadSetFamily(g, tuple(ordered))


def kernel_finiteness(
    chi: Character, n: int, budget: TietzeBudget | None = None
) -> FinitenessVerdict:
    """Decide FP_n and (three-valued) F_n for ker χ.

    Raises:
        ZeroCharacterError: If χ vanishes identically.
    """
    if n < 1:
        raise errors.PreconditionError("n must be at least 1")
    if chi.is_zero:
        raise errors.ZeroCharacterError("the character is identically zero")
    family = realizable_dead_sets(chi)
    witness = next(
        (d for d in family if not is_acyclic_dominating(chi.graph, d, n)), None
    )
    fp = Answer.of(witness is None)
    if fp is Answer.NO or n == 1:
        f = fp
    else:
        answers = [is_connected_dominating(chi.graph, d, n, budget) for d in family]
        if Answer.NO in answers:
            f = Answer.NO
        elif Answer.UNKNOWN in answers:
            f = Answer.UNKNOWN
        else:
            f = Answer.YES
    logger.info("kernel finiteness at n={}: FP {} / F {}", n, fp.value, f.value)
    return FinitenessVerdict(n, fp, f, len(family), witness)
