"""Reduced integral homology and connectivity of finite simplicial complexes."""

from dataclasses import dataclass
from typing import Any

import networkx as nx
from loguru import logger
from sympy.combinatorics.free_groups import FreeGroupElement, free_group

from graphprod_py._types import errors
from graphprod_py._types.complex import Simplex, SimplicialComplex
from graphprod_py._types.lattice import IntMatrix, SmithForm, smith_normal_form
from graphprod_py._types.records import Answer, TietzeBudget


@dataclass(slots=True, frozen=True)
class HomologyProfile:
    """Reduced homology H̃ₖ(K; ℤ) ≅ ℤ^betti[k] ⊕ ⊕ ℤ/torsion[k] for k ≤ k_max."""

    nonempty: bool
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    @property
    def k_max(self) -> int:
        return len(self.betti) - 1

    def is_zero(self, k: int) -> bool:
        return self.betti[k] == 0 and not self.torsion[k]

    def group(self, k: int) -> str:
        parts = []
        if self.betti[k]:
            parts.append("Z" if self.betti[k] == 1 else f"Z^{self.betti[k]}")
        parts.extend(f"Z/{t}" for t in self.torsion[k])
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict[str, Any]:
        return {
            "nonempty": self.nonempty,
            "groups": [self.group(k) for k in range(len(self.betti))],
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }

    def __str__(self) -> str:
        return "\n".join(f"H~{k}: {self.group(k)}" for k in range(len(self.betti)))


def boundary_matrix(K: SimplicialComplex, k: int) -> IntMatrix:
    """∂ₖ from k-chains to (k-1)-chains; ∂₀ is the augmentation onto ℤ.

    ∂[v0..vk] = Σ (-1)^i [v0..v̂i..vk], orientation by canonical vertex order.
    """
    columns = K.of_dimension(k)
    if k == 0:
        return IntMatrix.from_rows([[1] * len(columns)], cols=len(columns))
    rows = K.of_dimension(k - 1)
    index: dict[Simplex, int] = {s: i for i, s in enumerate(rows)}
    entries = [[0] * len(columns) for _ in rows]
    for j, simplex in enumerate(columns):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            entries[index[face]][j] += -1 if i % 2 else 1
    return IntMatrix.from_rows(entries, cols=len(columns))


def _check_exact(lower: IntMatrix, upper: IntMatrix) -> None:
    if lower.cols and upper.cols and lower.rows:
        product = lower @ upper
        if any(any(row) for row in product.entries):
            raise errors.InvariantViolationError("boundary of a boundary is nonzero")


def reduced_homology(K: SimplicialComplex, k_max: int) -> HomologyProfile:
    """Reduced homology in degrees ``0..k_max`` from exact boundary matrices.

    Raises:
        EmptyComplexError: If K has no vertices.
    """
    if K.is_empty:
        raise errors.EmptyComplexError("reduced homology of the empty complex")
    boundaries = [boundary_matrix(K, k) for k in range(k_max + 2)]
    for k in range(k_max + 1):
        _check_exact(boundaries[k], boundaries[k + 1])
    smiths: list[SmithForm] = [smith_normal_form(b) for b in boundaries]

    betti, torsion = [], []
    for k in range(k_max + 1):
        chains = boundaries[k].cols
        betti.append(chains - smiths[k].rank - smiths[k + 1].rank)
        torsion.append(tuple(d for d in smiths[k + 1].divisors if d > 1))
    profile = HomologyProfile(True, tuple(betti), tuple(torsion))

    if k_max >= K.dimension:
        euler = -1 + sum((-1) ** k * K.count(k) for k in range(K.dimension + 1))
        if euler != sum((-1) ** k * b for k, b in enumerate(betti)):
            raise errors.InvariantViolationError("Euler characteristic mismatch")
    logger.debug("reduced homology up to degree {}: {}", k_max, profile.betti)
    return profile


def is_k_acyclic(K: SimplicialComplex, k: int) -> bool:
    """Nonempty with H̃ᵢ = 0 for 0 ≤ i ≤ k.

    k = -1 means "nonempty"; below -1 the condition is vacuous.
    """
    if k <= -2:
        return True
    if K.is_empty:
        return False
    if k == -1:
        return True
    profile = reduced_homology(K, k)
    return all(profile.is_zero(i) for i in range(k + 1))


def is_connected(K: SimplicialComplex) -> bool:
    return not K.is_empty and nx.is_connected(K.one_skeleton())


def _letters(word: FreeGroupElement) -> list[tuple[Any, int]]:
    return [
        (symbol, 1 if exp > 0 else -1)
        for symbol, exp in word.array_form
        for _ in range(abs(exp))
    ]


def _fundamental_group(K: SimplicialComplex) -> tuple[tuple, list]:
    """Edge-path presentation: non-tree edges modulo boundaries of triangles."""
    skeleton = K.one_skeleton()
    root = K.vertices[0]
    tree = {frozenset(e) for e in nx.bfs_edges(skeleton, root)}
    edges = [e for e in K.of_dimension(1) if frozenset(e) not in tree]
    if not edges:
        return (), []
    group, *gens = free_group(tuple(f"e{i}" for i in range(len(edges))))
    by_edge = dict(zip(edges, gens))

    def path(u: str, v: str) -> FreeGroupElement:
        if (u, v) in by_edge:
            return by_edge[(u, v)]
        if (v, u) in by_edge:
            return by_edge[(v, u)] ** -1
        return group.identity

    relators = [path(a, b) * path(b, c) * path(a, c) ** -1 for a, b, c in K.of_dimension(2)]
    return tuple(gens), relators


def is_simply_connected(
    K: SimplicialComplex, budget: TietzeBudget | None = None
) -> Answer:
    """Three-valued simple connectivity; YES and NO are never wrong.

    NO for empty or disconnected complexes or when H̃₁ ≠ 0. YES when Tietze
    eliminations reduce the edge-path presentation to no generators within
    budget. UNKNOWN otherwise.
    """
    budget = budget or TietzeBudget()
    if not is_connected(K):
        return Answer.NO
    if not reduced_homology(K, 1).is_zero(1):
        return Answer.NO
    gens, relators = _fundamental_group(K)
    alive = list(gens)
    by_symbol = {g.array_form[0][0]: g for g in gens}
    rels = [r.identity_cyclic_reduction() for r in relators]
    rels = [r for r in rels if not r.is_identity]

    for step in range(budget.steps):
        if not alive:
            logger.debug("presentation trivial after {} eliminations", step)
            return Answer.YES
        choice = next(
            (
                (r, x)
                for r in sorted(rels, key=len)
                for x in alive
                if r.generator_count(x) == 1
            ),
            None,
        )
        if choice is None:
            break
        relator, x = choice
        letters = _letters(relator)
        symbol = x.array_form[0][0]
        at = next(i for i, (s, _) in enumerate(letters) if s == symbol)
        sign = letters[at][1]
        rest = relator.group.identity
        for s, e in letters[at + 1 :] + letters[:at]:
            rest = rest * by_symbol[s] ** e
        replacement = rest ** (-sign)
        rels = [
            r.eliminate_word(x, replacement, _all=True).identity_cyclic_reduction()
            for r in rels
            if r is not relator
        ]
        rels = [r for r in rels if not r.is_identity]
        alive.remove(x)
        if sum(len(r) for r in rels) > budget.max_relator_length:
            logger.warning("relators outgrew the Tietze budget")
            return Answer.UNKNOWN
    if not alive:
        return Answer.YES
    logger.warning(
        "simple connectivity undecided: {} generators, {} relators left",
        len(alive),
        len(rels),
    )
    return Answer.UNKNOWN
