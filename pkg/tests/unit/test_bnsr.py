"""Test the `bnsr` module."""

import random
from itertools import combinations

import pytest

from graphprod_py import (
    Answer,
    Character,
    SimplicialGraph,
    errors,
    is_acyclic_dominating,
    kernel_finiteness,
    living_subcomplex,
    realizable_dead_sets,
    sigma1_contains,
)
from graphprod_py._bnsr import is_connected_dominating


def _ones(g: SimplicialGraph) -> Character:
    return Character.from_mapping(g, {v: 1 for v in g.vertices})


def test_character(f2: SimplicialGraph) -> None:
    chi = Character.from_mapping(f2, {"a": 1})
    assert chi.values == ((1,), (0,))
    assert chi.dead == frozenset("b")
    assert chi((2, -1)) == (2,)
    assert str(chi) == "a=1,b=0"
    assert chi.to_dict() == {"rank": 1, "values": {"a": [1], "b": [0]}}
    assert chi.scaled(-2).values == ((-2,), (0,))

    chi = Character.from_mapping(f2, {"a": (1, 0), "b": (0, 1)})
    assert chi.rank == 2
    assert str(chi) == "a=(1,0); b=(0,1)"

    with pytest.raises(errors.UnknownVertexError):
        Character.from_mapping(f2, {"z": 1})
    with pytest.raises(errors.InvalidCharacterError):
        Character(f2, ((1,), (0, 0)), 1)
    with pytest.raises(errors.DimensionMismatchError):
        Character(f2, ((1,),), 1)
    g = SimplicialGraph.build("ab", orders={"a": 2})
    with pytest.raises(errors.InvalidCharacterError):
        Character.from_mapping(g, {"a": 1, "b": 1})


def test_living_subcomplex(c4: SimplicialGraph) -> None:
    K = living_subcomplex(c4, {"a"})
    assert K.vertices == ("b", "c", "d")
    assert K.count(1) == 2
    with pytest.raises(errors.UnknownVertexError):
        living_subcomplex(c4, {"z"})


def test_is_acyclic_dominating(c4: SimplicialGraph, k2: SimplicialGraph) -> None:
    assert is_acyclic_dominating(c4, set(), 1)
    assert not is_acyclic_dominating(c4, set(), 2)
    assert not is_acyclic_dominating(c4, {"b", "d"}, 1)
    assert is_acyclic_dominating(c4, {"a"}, 1)
    assert is_acyclic_dominating(k2, {"b"}, 5)
    assert is_acyclic_dominating(c4, set(), 0)
    with pytest.raises(errors.PreconditionError):
        is_acyclic_dominating(c4, set(), -1)


def test_sigma1_contains(
    c4: SimplicialGraph, f2: SimplicialGraph, k2: SimplicialGraph
) -> None:
    assert sigma1_contains(_ones(c4))
    assert not sigma1_contains(Character.from_mapping(c4, {"a": 1, "c": 1}))
    assert sigma1_contains(Character.from_mapping(c4, {"b": 1, "c": 1, "d": 1}))
    assert sigma1_contains(_ones(SimplicialGraph.build("a")))
    assert not sigma1_contains(Character.from_mapping(f2, {"a": 1}))
    assert sigma1_contains(Character.from_mapping(k2, {"a": 1}))

    with pytest.raises(errors.ZeroCharacterError):
        sigma1_contains(Character.from_mapping(k2, {}))
    with pytest.raises(errors.DimensionMismatchError):
        sigma1_contains(Character.from_mapping(k2, {"a": (1, 0)}))


def test_sigma1_is_symmetric_and_scale_invariant(c4: SimplicialGraph) -> None:
    for values in ({"a": 1}, {"a": 1, "b": -2}, {"a": 3, "c": 1}, {"b": 1, "d": 2}):
        chi = Character.from_mapping(c4, values)
        expected = sigma1_contains(chi)
        assert sigma1_contains(chi.scaled(-1)) is expected
        assert sigma1_contains(chi.scaled(5)) is expected


def test_realizable_dead_sets(f2: SimplicialGraph) -> None:
    chi = Character.from_mapping(f2, {"a": (1, 0), "b": (0, 1)})
    assert list(realizable_dead_sets(chi)) == [
        frozenset(),
        frozenset("a"),
        frozenset("b"),
    ]

    chi = Character.from_mapping(f2, {"a": (1, 0), "b": (2, 0)})
    assert list(realizable_dead_sets(chi)) == [frozenset()]

    g = SimplicialGraph.build("abc")
    chi = Character.from_mapping(g, {"a": (1, 0), "b": (0, 1)})
    assert list(realizable_dead_sets(chi)) == [
        frozenset("c"),
        frozenset("ac"),
        frozenset("bc"),
    ]


def test_kernel_finiteness_square(c4: SimplicialGraph) -> None:
    verdict = kernel_finiteness(_ones(c4), 1)
    assert (verdict.fp, verdict.f) == (Answer.YES, Answer.YES)

    verdict = kernel_finiteness(_ones(c4), 2)
    assert (verdict.fp, verdict.f) == (Answer.NO, Answer.NO)
    assert verdict.witness == frozenset()
    assert verdict.to_dict() == {
        "n": 2,
        "FP": "no",
        "F": "no",
        "dead_sets": 1,
        "witness": [],
    }


def test_kernel_finiteness_octahedron(octahedron: SimplicialGraph) -> None:
    verdict = kernel_finiteness(_ones(octahedron), 2)
    assert (verdict.fp, verdict.f) == (Answer.YES, Answer.YES)
    assert verdict.witness is None

    verdict = kernel_finiteness(_ones(octahedron), 3)
    assert verdict.fp is Answer.NO
    assert verdict.f is Answer.NO


def test_kernel_finiteness_higher_rank(f2: SimplicialGraph, k2: SimplicialGraph) -> None:
    chi = Character.from_mapping(f2, {"a": (1, 0), "b": (0, 1)})
    assert kernel_finiteness(chi, 1).fp is Answer.NO

    chi = Character.from_mapping(k2, {"a": (1, 0), "b": (0, 1)})
    for n in (1, 2, 3):
        verdict = kernel_finiteness(chi, n)
        assert (verdict.fp, verdict.f) == (Answer.YES, Answer.YES)
        assert verdict.dead_sets == 3


def test_kernel_finiteness_preconditions(k2: SimplicialGraph) -> None:
    with pytest.raises(errors.PreconditionError):
        kernel_finiteness(_ones(k2), 0)
    with pytest.raises(errors.ZeroCharacterError):
        kernel_finiteness(Character.from_mapping(k2, {}), 1)


def test_f_never_exceeds_fp(c4: SimplicialGraph, octahedron: SimplicialGraph) -> None:
    for g in (c4, octahedron):
        for n in (1, 2, 3):
            verdict = kernel_finiteness(_ones(g), n)
            if verdict.fp is Answer.NO:
                assert verdict.f is Answer.NO
    assert is_connected_dominating(octahedron, set(), 2) is Answer.YES
    assert is_connected_dominating(c4, set(), 2) is Answer.NO


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> SimplicialGraph:
    names = [f"v{i}" for i in range(n)]
    edges = [(u, v) for u, v in combinations(names, 2) if rng.random() < p]
    return SimplicialGraph.build(names, edges)


def _random_character(rng: random.Random, g: SimplicialGraph, rank: int) -> Character:
    """A nonzero character with small values, many of them zero."""
    while True:
        values = {
            v: tuple(rng.choice((-2, -1, 0, 0, 1, 2)) for _ in range(rank))
            for v in g.vertices
        }
        chi = Character.from_mapping(g, values, rank)
        if not chi.is_zero:
            return chi


def test_complete_graph_kernels_are_finite_type() -> None:
    rng = random.Random(61)
    for _ in range(25):
        g = _random_graph(rng, rng.randint(1, 5), p=1.0)
        chi = _random_character(rng, g, rng.randint(1, 2))
        for n in (1, 2, 3):
            verdict = kernel_finiteness(chi, n)
            assert (verdict.fp, verdict.f) == (Answer.YES, Answer.YES)


def test_rank_one_fp1_is_sigma1() -> None:
    rng = random.Random(62)
    for _ in range(100):
        g = _random_graph(rng, rng.randint(1, 6))
        chi = _random_character(rng, g, 1)
        for c in (chi, chi.scaled(-1)):
            expected = Answer.of(sigma1_contains(c))
            assert kernel_finiteness(c, 1).fp is expected


def test_dead_sets_contain_the_zero_set() -> None:
    rng = random.Random(63)
    for _ in range(100):
        g = _random_graph(rng, rng.randint(1, 6))
        chi = _random_character(rng, g, rng.randint(1, 3))
        family = list(realizable_dead_sets(chi))
        assert chi.dead in family
        assert all(chi.dead <= d for d in family)
        assert all(d != frozenset(g.vertices) for d in family)
