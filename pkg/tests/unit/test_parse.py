"""Test the `parse` module."""

from pathlib import Path

import pytest

from graphprod_py import SimplicialGraph, errors, parse_graph, read_graph
from graphprod_py._parse import (
    parse_character,
    parse_character_file,
    parse_words,
    read_character,
    read_words,
)
from graphprod_py._types.graph import INFINITE

GRAPH = """\
# the path a - b - c with an involution in the middle
vertex a
vertex b order 2   # reflection
vertex c order infinity

edge a b
edge b c
"""


def test_parse_graph() -> None:
    g = parse_graph(GRAPH)
    assert g.vertices == ("a", "b", "c")
    assert g.orders == (INFINITE, 2, INFINITE)
    assert g.adjacent("a", "b")
    assert not g.adjacent("a", "c")
    assert parse_graph(str(g)) == g


@pytest.mark.parametrize(
    ("text", "error", "line", "token"),
    [
        ("vertex a\nvertex a", errors.DuplicateVertexError, 2, "a"),
        ("vertex a order 1", errors.InvalidOrderError, 1, "1"),
        ("vertex a order 0", errors.InvalidOrderError, 1, "0"),
        ("vertex a order two", errors.InvalidOrderError, 1, "two"),
        ("vertex a\nedge a b", errors.ParseError, 2, "b"),
        ("vertex a\nedge a a", errors.ParseError, 2, "a"),
        ("vertex a\nvertex b\nedge a b\nedge b a", errors.DuplicateEdgeError, 4, "b a"),
        ("vertex a\nnode b", errors.ParseError, 2, "node"),
        ("vertex a order", errors.ParseError, 1, "vertex"),
    ],
)
def test_parse_graph_errors(
    text: str, error: type[errors.ParseError], line: int, token: str
) -> None:
    with pytest.raises(error) as info:
        parse_graph(text, "g.txt")
    assert info.value.line == line
    assert info.value.token == token
    assert str(info.value).startswith(f"g.txt:{line}: ")
    assert info.value.code == error.code


def test_parse_graph_empty() -> None:
    with pytest.raises(errors.EmptyGraphError):
        parse_graph("# nothing\n")


@pytest.mark.parametrize("name", ["b^c", "1", "a=b", "a,b"])
def test_parse_graph_bad_name(name: str) -> None:
    with pytest.raises(errors.ParseError) as info:
        parse_graph(f"vertex a\nvertex {name}\n", "g.graph")
    assert (info.value.line, info.value.token) == (2, name)
    assert str(info.value).startswith("g.graph:2: invalid vertex name")


def test_read_graph(tmp_path: Path) -> None:
    path = tmp_path / "g.graph"
    path.write_text(GRAPH, encoding="utf-8")
    assert len(read_graph(path)) == 3

    with pytest.raises(errors.ParseError) as info:
        read_graph(tmp_path / "missing.graph")
    assert "cannot read file" in str(info.value)


def test_parse_words(path3: SimplicialGraph, tmp_path: Path) -> None:
    words = parse_words(path3, "a b\n\n# comment\nb^-2 c  # trailing\n1\n")
    assert [str(w) for w in words] == ["a b", "b^-2 c", "1"]

    with pytest.raises(errors.InvalidWordError) as info:
        parse_words(path3, "a\nb z", "n.txt")
    assert (info.value.path, info.value.line, info.value.token) == ("n.txt", 2, "z")

    path = tmp_path / "n.txt"
    path.write_text("a c^-1\n", encoding="utf-8")
    assert [str(w) for w in read_words(path3, path)] == ["a c^-1"]


def test_parse_character(path3: SimplicialGraph) -> None:
    chi = parse_character(path3, "a=1, c=-2")
    assert chi.values == ((1,), (0,), (-2,))
    assert parse_character(path3, "").is_zero

    for bad in ("a", "z=1", "a=x", "a=1,a=2"):
        with pytest.raises(errors.InvalidCharacterError):
            parse_character(path3, bad)

    g = SimplicialGraph.build("ab", orders={"b": 2})
    assert parse_character(g, "b=0").is_zero
    with pytest.raises(errors.InvalidCharacterError):
        parse_character(g, "b=1")


def test_parse_character_file(path3: SimplicialGraph, tmp_path: Path) -> None:
    chi = parse_character_file(path3, "a 1 0\nc 0 1  # second coordinate\n")
    assert chi.rank == 2
    assert chi.values == ((1, 0), (0, 0), (0, 1))

    with pytest.raises(errors.InvalidCharacterError) as info:
        parse_character_file(path3, "a 1 0\nb 1", "chi.txt")
    assert info.value.line == 2
    for bad in ("", "z 1", "a 1\na 2", "a x"):
        with pytest.raises(errors.InvalidCharacterError):
            parse_character_file(path3, bad)

    path = tmp_path / "chi.txt"
    path.write_text("b 3\n", encoding="utf-8")
    assert read_character(path3, path).values == ((0,), (3,), (0,))
