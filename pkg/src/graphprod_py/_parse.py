"""Text formats: graph files, word lists and character specifications.

Graph file, one directive per line, ``#`` starts a comment::

    vertex a order inf
    vertex b order 2
    edge a b

``order`` may be omitted (infinite cyclic). Vertex declaration order is the
canonical order.
"""

from collections.abc import Iterator
from pathlib import Path

from loguru import logger

from graphprod_py._bnsr import Character
from graphprod_py._types import errors
from graphprod_py._types.graph import INFINITE, SimplicialGraph, valid_vertex_name
from graphprod_py._types.word import Word


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _read(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise errors.ParseError(f"cannot read file: {exc.strerror}", path=str(path)) from None


def _relocate(exc: errors.ParseError, path: str | None, line: int) -> errors.ParseError:
    return type(exc)(exc.message, path=path, line=line, token=exc.token)


def _order(token: str, path: str | None, line: int) -> int:
    if token in ("inf", "infinity"):
        return INFINITE
    try:
        order = int(token)
    except ValueError:
        raise errors.InvalidOrderError("order is not an integer", path, line, token) from None
    if order < 2:
        raise errors.InvalidOrderError("order must be >= 2 or inf", path, line, token)
    return order


def parse_graph(text: str, path: str | None = None) -> SimplicialGraph:
    """Parse the graph file format.

    >>> print(parse_graph("vertex a\\nvertex b order 2\\nedge a b"))
    vertex a order inf
    vertex b order 2
    edge a b

    Raises:
        ParseError: With the offending line and token.
    """
    vertices: dict[str, int] = {}
    edges: list[tuple[str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, tokens in _lines(text):
        match tokens:
            case ["vertex", name] | ["vertex", name, "order", _]:
                if not valid_vertex_name(name):
                    raise errors.ParseError("invalid vertex name", path, lineno, name)
                if name in vertices:
                    raise errors.DuplicateVertexError("duplicate vertex", path, lineno, name)
                order = _order(tokens[3], path, lineno) if len(tokens) == 4 else INFINITE
                vertices[name] = order
            case ["edge", u, v]:
                for end in (u, v):
                    if end not in vertices:
                        msg = "edge endpoint is not a declared vertex"
                        raise errors.ParseError(msg, path, lineno, end)
                if u == v:
                    raise errors.ParseError("self-loop", path, lineno, u)
                if frozenset((u, v)) in seen:
                    raise errors.DuplicateEdgeError("duplicate edge", path, lineno, f"{u} {v}")
                seen.add(frozenset((u, v)))
                edges.append((u, v))
            case _:
                raise errors.ParseError("unknown directive", path, lineno, tokens[0])
    if not vertices:
        raise errors.EmptyGraphError("the graph declares no vertices")
    try:
        graph = SimplicialGraph.build(vertices, edges, vertices)
    except errors.InvalidGraphError as exc:
        raise errors.ParseError(str(exc), path) from None
    logger.debug("parsed graph with {} vertices and {} edges", len(graph), len(edges))
    return graph


def read_graph(path: str | Path) -> SimplicialGraph:
    return parse_graph(_read(path), str(path))


def parse_words(graph: SimplicialGraph, text: str, path: str | None = None) -> list[Word]:
    """One word per non-blank line; ``#`` starts a comment."""
    words = []
    for lineno, tokens in _lines(text):
        try:
            words.append(Word.parse(graph, " ".join(tokens)))
        except errors.ParseError as exc:
            raise _relocate(exc, path, lineno) from None
    return words


def read_words(graph: SimplicialGraph, path: str | Path) -> list[Word]:
    return parse_words(graph, _read(path), str(path))


def parse_word(graph: SimplicialGraph, text: str) -> Word:
    return Word.parse(graph, text)


def _int(token: str, path: str | None, line: int | None) -> int:
    try:
        return int(token)
    except ValueError:
        raise errors.InvalidCharacterError("value is not an integer", path, line, token) from None


def parse_character(graph: SimplicialGraph, text: str) -> Character:
    """Rank-1 character from ``a=1,b=0``; unlisted vertices map to 0.

    >>> g = SimplicialGraph.build("ab")
    >>> parse_character(g, "a=2").values
    ((2,), (0,))
    """
    values: dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in graph:
            raise errors.InvalidCharacterError("expected vertex=value", token=item)
        if name in values:
            raise errors.InvalidCharacterError("vertex assigned twice", token=name)
        values[name] = _int(value.strip(), None, None)
    _check_finite(graph, values, None)
    return Character.from_mapping(graph, values, rank=1)


def parse_character_file(
    graph: SimplicialGraph, text: str, path: str | None = None
) -> Character:
    """Rank-r character: lines ``<vertex> <r integers>``."""
    values: dict[str, tuple[int, ...]] = {}
    rank = None
    for lineno, (name, *entries) in _lines(text):
        if name not in graph:
            raise errors.InvalidCharacterError("unknown vertex", path, lineno, name)
        if name in values:
            raise errors.InvalidCharacterError("vertex assigned twice", path, lineno, name)
        if rank is None:
            rank = len(entries)
        elif len(entries) != rank:
            msg = f"expected {rank} values"
            raise errors.InvalidCharacterError(msg, path, lineno, name)
        values[name] = tuple(_int(x, path, lineno) for x in entries)
    if rank is None:
        raise errors.InvalidCharacterError("empty character file", path)
    _check_finite(graph, values, path)
    return Character.from_mapping(graph, values, rank=rank)


def read_character(graph: SimplicialGraph, path: str | Path) -> Character:
    return parse_character_file(graph, _read(path), str(path))


def _check_finite(graph: SimplicialGraph, values: dict, path: str | None) -> None:
    for name, value in values.items():
        nonzero = value != 0 if isinstance(value, int) else any(value)
        if nonzero and graph.order(name) != INFINITE:
            msg = "a finite cyclic vertex group only maps to 0"
            raise errors.InvalidCharacterError(msg, path, token=name)
