"""Integration tests configuration."""

from collections.abc import Callable
from pathlib import Path

import pytest

from graphprod_py import main

FILES = {
    "c4.graph": "vertex a\nvertex b\nvertex c\nvertex d\n"
    "edge a b\nedge b c\nedge c d\nedge d a\n",
    "k2.graph": "vertex a\nvertex b\nedge a b\n",
    "path.graph": "vertex a\nvertex b\nvertex c\nedge a b\nedge b c\n",
    "f2.graph": "vertex a\nvertex b\n",
    "octahedron.graph": "".join(f"vertex {v}\n" for v in ("a1", "a2", "b1", "b2", "c1", "c2"))
    + "".join(
        f"edge {u} {v}\n"
        for u, v in (
            ("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2"),
            ("a1", "c1"), ("a1", "c2"), ("a2", "c1"), ("a2", "c2"),
            ("b1", "c1"), ("b1", "c2"), ("b2", "c1"), ("b2", "c2"),
        )
    ),  # fmt: skip
    "bad.graph": "vertex a\nvertex a\n",
    "c4.gens": "a b^-1\nc b^-1\na d^-1\n",
    "path.gens": "b^2\n",
    "f2.gens": "a^3\nb\na b a^-1\na^2 b a^-2\n",
    "octahedron.gens": "a1 a2^-1\nb1 b2^-1\nc1 c2^-1\na1 b1^-1\na1 c1^-1\n",
    "rank2.chi": "a 1 0\nb 0 1\n",
}


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory: pytest.TempPathFactory) -> Path:
    """Return a directory holding the sample graph, generator and character files."""
    path = tmp_path_factory.mktemp("data")
    for name, text in FILES.items():
        (path / name).write_text(text, encoding="utf-8")
    return path


@pytest.fixture(name="cli")
def cli_fx(
    data_dir: Path, capsys: pytest.CaptureFixture[str]
) -> Callable[..., tuple[int, str, str]]:
    """Run the CLI; file names are resolved against the data directory."""

    def _run(*args: str) -> tuple[int, str, str]:
        argv = [str(data_dir / a) if a in FILES else a for a in args]
        code = main(argv)
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run
