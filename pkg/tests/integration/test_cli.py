"""Test the command-line interface."""

import json
import subprocess
import sys
from collections.abc import Callable
from pathlib import Path

import pytest

Cli = Callable[..., tuple[int, str, str]]


def test_decompose(cli: Cli) -> None:
    code, out, _ = cli("decompose", "c4.graph")
    assert code == 0
    assert out.splitlines() == ["factors: {a,c} {b,d}; central: (none)", "kind: RAAG"]


def test_words(cli: Cli) -> None:
    assert cli("nf", "path.graph", "c b a")[1] == "b c a\n"
    assert cli("eq", "k2.graph", "a b", "b a")[1] == "equal: yes\n"
    assert cli("eq", "f2.graph", "a b", "b a")[1] == "equal: no\n"
    assert cli("conj", "f2.graph", "a b", "b a")[1] == "conjugate: yes\n"
    assert cli("abel", "f2.graph", "a^3 b^-1 a^-1")[1] == "abelianization: a=2,b=-1\n"


def test_sigma1(cli: Cli) -> None:
    code, out, _ = cli("sigma1", "c4.graph", "--chi", "a=1,b=1,c=1,d=1")
    assert code == 0
    assert "sigma1: yes" in out.splitlines()

    out = cli("sigma1", "c4.graph", "--chi", "a=1,c=1")[1]
    assert out.splitlines()[1:] == ["dead: {b,d}", "sigma1: no"]


def test_fintype_character(cli: Cli) -> None:
    out = cli("fintype", "c4.graph", "--chi", "a=1,b=1,c=1,d=1", "-n", "2")[1]
    lines = out.splitlines()
    assert "FP_2: no" in lines
    assert "F_2: no" in lines
    assert "witness: {}" in lines

    out = cli("fintype", "f2.graph", "--chi-file", "rank2.chi")[1]
    assert "FP_1: no" in out.splitlines()


def test_fintype_subgroup(cli: Cli) -> None:
    args = ("fintype", "octahedron.graph", "--gens", "octahedron.gens")
    lines = cli(*args, "-n", "2")[1].splitlines()
    assert lines[:4] == ["normality: ASSERTED", "FP_2: yes", "F_2: yes", "conditional: yes"]
    assert "FP_3: no" in cli(*args, "-n", "3")[1].splitlines()


def test_quotient(cli: Cli) -> None:
    code, out, _ = cli("quotient", "path.graph", "--gens", "path.gens")
    assert code == 0
    lines = out.splitlines()
    assert "fullness {a,c}: NOT_FULL" in lines
    assert "fullness {b}: FULL" in lines
    assert "split_form: Z/2 x F(a,c) (exact)" in lines
    assert "abelianized_quotient: Z^2 + Z/2" in lines
    assert "central_hypothesis: b: cyclic of order inf" in lines


def test_quotient_verified(cli: Cli) -> None:
    out = cli(
        "quotient", "f2.graph", "--gens", "f2.gens", "--verify-normality",
        "--budget-depth", "3",
    )[1]  # fmt: skip
    lines = out.splitlines()
    assert lines[0] == "normality: VERIFIED"
    assert "torsion: 3" in lines
    assert "guarantee: finite quotient (guaranteed if N full and normal)" in lines


def test_member(cli: Cli) -> None:
    out = cli("member", "c4.graph", "a b^-1", "--gens", "c4.gens")[1]
    assert out.splitlines()[:2] == ["membership: IN", "certificate: n1"]

    out = cli("member", "c4.graph", "a", "--gens", "c4.gens")[1]
    assert out.splitlines()[:2] == ["membership: NOT_IN", "image: 1,0,0,0"]

    out = cli("member", "f2.graph", "b", "--gens", "c4.gens")
    assert out[0] == 2


def test_normality_and_coabelian(cli: Cli) -> None:
    out = cli("normality", "f2.graph", "--gens", "f2.gens", "--budget-depth", "3")[1]
    assert out.splitlines()[:2] == ["normality: VERIFIED", "checks: 16"]

    out = cli("coabelian", "f2.graph", "--gens", "f2.gens")[1]
    assert out.splitlines()[:2] == ["coabelian: VERIFIED", "quotient: Z/3 (if N is normal)"]

    out = cli("central", "f2.graph", "a", "--gens", "f2.gens")[1]
    assert out.splitlines()[0] == "centrality: CENTRAL_MOD_N"


def test_homology(cli: Cli) -> None:
    lines = cli("homology", "octahedron.graph")[1].splitlines()
    assert lines[:3] == ["H~0: 0", "H~1: 0", "H~2: Z"]
    assert "simply_connected: yes" in lines

    lines = cli("homology", "c4.graph", "--dead", "b,d")[1].splitlines()
    assert lines[0] == "H~0: Z"
    assert "connected: no" in lines


def test_json(cli: Cli) -> None:
    payload = json.loads(cli("quotient", "path.graph", "--gens", "path.gens", "--json")[1])
    assert payload["rank"] == 2
    assert payload["torsion"] == [2]
    assert payload["split_form"]["rendered"] == "Z/2 x F(a,c)"
    assert payload["budgets"]["fullness"] == {"extra_length": 0}

    payload = json.loads(cli("decompose", "path.graph", "--json")[1])
    assert payload == {"central": ["b"], "factors": [["a", "c"], ["b"]], "kind": "RAAG"}


@pytest.mark.parametrize(
    ("args", "code", "message"),
    [
        (("decompose", "bad.graph"), 2, "DUPLICATE_VERTEX"),
        (("nf", "f2.graph", "a z"), 2, "INVALID_WORD"),
        (("sigma1", "f2.graph", "--chi", "a=0"), 3, "ZERO_CHARACTER"),
        (("fintype", "path.graph", "--gens", "path.gens"), 3, "NOT_FULL_INPUT"),
        (("member", "c4.graph", "a"), 3, "PRECONDITION"),
        (
            ("fintype", "octahedron.graph", "--gens", "octahedron.gens", "--chi", "a1=1"),
            3,
            "PRECONDITION",
        ),
        (("homology", "c4.graph", "--dead", "z"), 2, "PARSE_ERROR"),
    ],
)
def test_errors(cli: Cli, args: tuple[str, ...], code: int, message: str) -> None:
    result, out, err = cli(*args)
    assert result == code
    assert out == ""
    assert err.startswith(f"error: {message}: ")


def test_bad_graph_location(cli: Cli) -> None:
    err = cli("decompose", "bad.graph")[2]
    assert "bad.graph:2:" in err


def test_deterministic(cli: Cli) -> None:
    args = ("quotient", "octahedron.graph", "--gens", "octahedron.gens", "--json")
    assert cli(*args)[1] == cli(*args)[1]


def test_module_entry_point(data_dir: Path) -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "graphprod_py", "nf", str(data_dir / "k2.graph"), "b a"],
        check=False,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "a b\n"
