"""Words, normal forms and the word/conjugacy problems in graph products."""

import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from loguru import logger

from graphprod_py._types import errors
from graphprod_py._types.graph import INFINITE, SimplicialGraph

Syllable = tuple[str, int]

_TOKEN = re.compile(r"^(?P<name>[^\s^]+)(?:\^(?P<exp>[+-]?\d+))?$")


@dataclass(slots=True, frozen=True)
class Word:
    """A product of syllables ``(vertex, exponent)`` read left to right."""

    graph: SimplicialGraph
    syllables: tuple[Syllable, ...] = ()

    def __post_init__(self) -> None:
        for vertex, exponent in self.syllables:
            if vertex not in self.graph:
                raise errors.UnknownVertexError(f"unknown vertex {vertex!r}")
            if not isinstance(exponent, int) or exponent == 0:
                msg = f"exponent must be a nonzero integer, got {exponent!r}"
                raise errors.InvalidWordError(msg, token=vertex)

    @classmethod
    def parse(cls, graph: SimplicialGraph, text: str) -> "Word":
        """Read ``name`` / ``name^k`` tokens; ``""`` and ``"1"`` are the identity.

        >>> g = SimplicialGraph.build("ab")
        >>> Word.parse(g, "a^2 b^-1").syllables
        (('a', 2), ('b', -1))
        """
        syllables = []
        for token in text.split():
            if token == "1":
                continue
            match = _TOKEN.match(token)
            if match is None:
                raise errors.InvalidWordError("malformed token", token=token)
            name = match["name"]
            if name not in graph:
                raise errors.InvalidWordError("unknown vertex", token=token)
            exponent = int(match["exp"]) if match["exp"] is not None else 1
            if exponent == 0:
                raise errors.InvalidWordError("zero exponent", token=token)
            syllables.append((name, exponent))
        return cls(graph, tuple(syllables))

    @classmethod
    def generator(cls, graph: SimplicialGraph, vertex: str, exponent: int = 1) -> "Word":
        return cls(graph, ((vertex, exponent),))

    def __len__(self) -> int:
        return len(self.syllables)

    def __mul__(self, other: "Word") -> "Word":
        _check_context(self, other)
        return Word(self.graph, self.syllables + other.syllables)

    def inverse(self) -> "Word":
        return Word(self.graph, tuple((v, -e) for v, e in reversed(self.syllables)))

    @property
    def support(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "1"
        return " ".join(v if e == 1 else f"{v}^{e}" for v, e in self.syllables)


@dataclass(slots=True, frozen=True)
class NormalForm(Word):
    """The canonical spelling of a group element.

    Reduced (no two syllables of one vertex can be shuffled together) and
    lexicographically least under the canonical vertex order among all
    shuffle-equivalent spellings. Finite-order exponents lie in 1..m-1.
    """

    @property
    def is_identity(self) -> bool:
        return not self.syllables


def _check_context(u: Word, v: Word) -> None:
    if u.graph != v.graph:
        raise errors.ContextMismatchError("words are read over different graphs")


def _reduce_exponent(graph: SimplicialGraph, vertex: str, exponent: int) -> int:
    order = graph.order(vertex)
    return exponent if order == INFINITE else exponent % order


def _pile(graph: SimplicialGraph, syllables: Iterable[Syllable]) -> list[Syllable]:
    """Left-to-right piling into a reduced (not yet canonical) spelling."""
    stack: list[Syllable] = []
    for vertex, raw in syllables:
        exponent = _reduce_exponent(graph, vertex, raw)
        if exponent == 0:
            continue
        for j in range(len(stack) - 1, -1, -1):
            other, other_exp = stack[j]
            if other == vertex:
                merged = _reduce_exponent(graph, vertex, other_exp + exponent)
                if merged == 0:
                    del stack[j]
                else:
                    stack[j] = (vertex, merged)
                break
            if not graph.adjacent(other, vertex):
                stack.append((vertex, exponent))
                break
        else:
            stack.append((vertex, exponent))
    return stack


def _front_movable(graph: SimplicialGraph, syllables: Sequence[Syllable]) -> list[int]:
    """Indices of syllables that commute past everything before them."""
    return [
        i
        for i, (v, _) in enumerate(syllables)
        if all(graph.adjacent(u, v) for u, _ in syllables[:i])
    ]


def _back_movable(graph: SimplicialGraph, syllables: Sequence[Syllable]) -> list[int]:
    return [
        i
        for i, (v, _) in enumerate(syllables)
        if all(graph.adjacent(u, v) for u, _ in syllables[i + 1 :])
    ]


def _canonical(graph: SimplicialGraph, reduced: list[Syllable]) -> tuple[Syllable, ...]:
    """Stable topological sort picking the least available vertex first."""
    remaining = list(reduced)
    ordered = []
    while remaining:
        best = min(
            _front_movable(graph, remaining),
            key=lambda i: graph.index(remaining[i][0]),
        )
        ordered.append(remaining.pop(best))
    return tuple(ordered)


def normal_form(w: Word) -> NormalForm:
    """Canonical form of ``w``; empty exactly when ``w`` is the identity.

    >>> g = SimplicialGraph.build("ab", [("a", "b")])
    >>> str(normal_form(Word.parse(g, "b a")))
    'a b'
    """
    if isinstance(w, NormalForm):
        return w
    reduced = _pile(w.graph, w.syllables)
    return NormalForm(w.graph, _canonical(w.graph, reduced))


def multiply(*words: Word) -> NormalForm:
    """Normal form of a product."""
    if not words:
        raise errors.PreconditionError("at least one word is required")
    graph = words[0].graph
    for w in words[1:]:
        _check_context(words[0], w)
    return normal_form(Word(graph, tuple(s for w in words for s in w.syllables)))


def equal(u: Word, v: Word) -> bool:
    _check_context(u, v)
    return normal_form(u) == normal_form(v)


def abelianize(w: Word) -> tuple[int, ...]:
    """Exponent sums per vertex (canonical order), reduced at finite vertices."""
    sums = [0] * len(w.graph)
    for vertex, exponent in w.syllables:
        sums[w.graph.index(vertex)] += exponent
    return tuple(
        s if m == INFINITE else s % m for s, m in zip(sums, w.graph.moduli)
    )


def conjugate_by(w: Word, g: Word) -> NormalForm:
    """``g w g⁻¹`` in normal form."""
    _check_context(w, g)
    return multiply(g, w, g.inverse())


def commutator(u: Word, v: Word) -> NormalForm:
    """``u v u⁻¹ v⁻¹`` in normal form."""
    _check_context(u, v)
    return multiply(u, v, u.inverse(), v.inverse())


def project(w: Word, keep: Iterable[str]) -> NormalForm:
    """Delete syllables outside ``keep``.

    A homomorphism onto 𝒢(keep) whenever ``keep`` is a union of join factors.
    """
    kept = frozenset(keep)
    return normal_form(Word(w.graph, tuple(s for s in w.syllables if s[0] in kept)))


def _rotate(nf: NormalForm, index: int) -> NormalForm:
    rest = nf.syllables[:index] + nf.syllables[index + 1 :]
    return normal_form(Word(nf.graph, rest + (nf.syllables[index],)))


def cyclic_reduce(w: Word) -> NormalForm:
    """A shortest conjugate reachable by moving front syllables to the back.

    Repeats while some front-movable syllable shares its vertex with a
    distinct back-movable one; each step shortens the word.
    """
    nf = normal_form(w)
    graph = nf.graph
    while True:
        front = _front_movable(graph, nf.syllables)
        back = _back_movable(graph, nf.syllables)
        pair = next(
            (
                i
                for i in front
                for j in back
                if i != j and nf.syllables[i][0] == nf.syllables[j][0]
            ),
            None,
        )
        if pair is None:
            return nf
        nf = _rotate(nf, pair)


def cyclic_class(w: Word) -> frozenset[NormalForm]:
    """All normal forms reachable from a cyclically reduced ``w`` by rotation.

    Exponential in the worst case.
    """
    start = cyclic_reduce(w)
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for i in _front_movable(current.graph, current.syllables):
            rotated = _rotate(current, i)
            if rotated not in seen:
                seen.add(rotated)
                queue.append(rotated)
    return frozenset(seen)


def is_conjugate(u: Word, v: Word) -> bool:
    """Whether some ``g`` has ``g u g⁻¹ = v``."""
    _check_context(u, v)
    if abelianize(u) != abelianize(v):
        return False
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if cu == cv:
        return True
    found = cv in cyclic_class(cu)
    logger.debug("conjugacy of {} and {} by rotation search: {}", cu, cv, found)
    return found
