"""Exact integer linear algebra: Smith normal form and lattice quotients.

Matrices are numpy arrays of ``dtype=object`` so that every entry stays an
arbitrary-precision Python ``int``; nothing here ever touches floating point.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger

from graphprod_py._types import errors

Vector = tuple[int, ...]


@dataclass(slots=True, frozen=True)
class IntMatrix:
    """An immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            msg = f"entries do not form a {self.rows}x{self.cols} matrix"
            raise errors.DimensionMismatchError(msg)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> "IntMatrix":
        """Build from rows; ``cols`` is required when there are no rows.

        >>> IntMatrix.from_rows([[1, -1], [2, 0]]).cols
        2
        """
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise errors.DimensionMismatchError("cols is required for 0 rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "IntMatrix":
        rows, cols = array.shape
        return cls(
            rows, cols, tuple(tuple(int(x) for x in array[i]) for i in range(rows))
        )

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_array(_eye(n))

    @property
    def array(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=object)
        for i, row in enumerate(self.entries):
            for j, x in enumerate(row):
                out[i, j] = x
        return out

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            msg = f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            raise errors.DimensionMismatchError(msg)
        return IntMatrix.from_array(_matmul(self.array, other.array))

    def apply(self, vector: Sequence[int]) -> Vector:
        """``self · vector`` for a column vector."""
        if len(vector) != self.cols:
            raise errors.DimensionMismatchError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vector)) for row in self.entries)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


@dataclass(slots=True, frozen=True)
class SmithForm:
    """``U · M · V = D`` with U, V unimodular and D diagonal."""

    matrix: IntMatrix
    U: IntMatrix
    V: IntMatrix
    D: IntMatrix
    diagonal: Vector
    """The min(rows, cols) diagonal entries of D, zeros included."""

    @property
    def divisors(self) -> Vector:
        """Nonzero diagonal entries; each divides the next."""
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def rank(self) -> int:
        return len(self.divisors)


@dataclass(slots=True, frozen=True)
class LatticeQuotient:
    """ℤⁿ modulo coordinate moduli and a relation lattice.

    Isomorphic to ℤ^rank ⊕ ⊕ ℤ/torsionᵢ; ``free_projection`` maps ℤⁿ onto the
    free part, up to a unimodular change of basis of ℤ^rank.
    """

    ambient_rank: int
    moduli: Vector
    relation_gens: tuple[Vector, ...]
    rank: int
    torsion: Vector
    free_projection: IntMatrix
    smith: SmithForm

    def contains(self, target: Sequence[int]) -> bool:
        """Whether ``target`` lies in the relation lattice (moduli included)."""
        if len(target) != self.ambient_rank:
            raise errors.DimensionMismatchError("target length mismatch")
        image = _vecmat(target, self.smith.V.array)
        for i, value in enumerate(image):
            d = self.smith.diagonal[i] if i < len(self.smith.diagonal) else 0
            if d == 0:
                if value != 0:
                    return False
            elif value % d != 0:
                return False
        return True

    def describe(self) -> str:
        """Human-readable group, e.g. ``Z^2 + Z/2``; ``0`` when trivial."""
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def _eye(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0], b.shape[1]), dtype=object)
    if a.shape[1] == 0:
        return out
    return np.dot(a, b).astype(object)


def _vecmat(vector: Sequence[int], matrix: np.ndarray) -> Vector:
    return tuple(
        sum(int(vector[i]) * int(matrix[i, j]) for i in range(len(vector)))
        for j in range(matrix.shape[1])
    )


def smith_normal_form(M: IntMatrix) -> SmithForm:
    """Smith normal form by gcd pivoting on the least nonzero absolute value.

    >>> smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]])).divisors
    (2, 4)
    """
    D = M.array
    m, n = D.shape
    U, V = _eye(m), _eye(n)
    rounds = 0
    for t in range(min(m, n)):
        while True:
            rounds += 1
            block = [
                (abs(D[i, j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if D[i, j] != 0
            ]
            if not block:
                break
            _, pi, pj = min(block)
            if pi != t:
                D[[t, pi]] = D[[pi, t]]
                U[[t, pi]] = U[[pi, t]]
            if pj != t:
                D[:, [t, pj]] = D[:, [pj, t]]
                V[:, [t, pj]] = V[:, [pj, t]]
            pivot = D[t, t]
            clear = True
            for i in range(t + 1, m):
                q = D[i, t] // pivot
                if q:
                    D[i] = D[i] - q * D[t]
                    U[i] = U[i] - q * U[t]
                if D[i, t] != 0:
                    clear = False
            for j in range(t + 1, n):
                q = D[t, j] // pivot
                if q:
                    D[:, j] = D[:, j] - q * D[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]
                if D[t, j] != 0:
                    clear = False
            if not clear:
                continue
            offender = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if D[i, j] % pivot != 0
                ),
                None,
            )
            if offender is None:
                break
            D[t] = D[t] + D[offender]
            U[t] = U[t] + U[offender]
        if t < m and t < n and D[t, t] < 0:
            D[t] = -D[t]
            U[t] = -U[t]
    logger.debug("smith normal form of {}x{} matrix in {} rounds", m, n, rounds)

    smith = SmithForm(
        matrix=M,
        U=IntMatrix.from_array(U),
        V=IntMatrix.from_array(V),
        D=IntMatrix.from_array(D),
        diagonal=tuple(int(D[i, i]) for i in range(min(m, n))),
    )
    if (smith.U @ M) @ smith.V != smith.D:
        raise errors.InvariantViolationError("U·M·V does not reproduce D")
    return smith


def _relation_matrix(
    ambient_moduli: Sequence[int], relation_gens: Iterable[Sequence[int]]
) -> IntMatrix:
    n = len(ambient_moduli)
    rows = []
    for gen in relation_gens:
        if len(gen) != n:
            raise errors.DimensionMismatchError("relation length mismatch")
        rows.append(tuple(int(x) for x in gen))
    for i, modulus in enumerate(ambient_moduli):
        if modulus < 0:
            raise errors.DimensionMismatchError("moduli must be nonnegative")
        if modulus:
            rows.append(tuple(modulus if j == i else 0 for j in range(n)))
    return IntMatrix.from_rows(rows, cols=n)


def _normalize_sign(row: Sequence[int]) -> Vector:
    lead = next((x for x in row if x != 0), 0)
    return tuple(-x for x in row) if lead < 0 else tuple(row)


def quotient_structure(
    ambient_moduli: Sequence[int],
    relation_gens: Iterable[Sequence[int]],
) -> LatticeQuotient:
    """Structure of ℤⁿ / (moduli + ⟨relation_gens⟩).

    >>> q = quotient_structure((0, 0), [(1, -1), (2, 0)])
    >>> q.rank, q.torsion
    (0, (2,))
    """
    gens = tuple(tuple(int(x) for x in g) for g in relation_gens)
    smith = smith_normal_form(_relation_matrix(ambient_moduli, gens))
    n = len(ambient_moduli)
    r = smith.rank
    V = smith.V.array
    projection = IntMatrix.from_rows(
        (_normalize_sign([int(V[i, j]) for i in range(n)]) for j in range(r, n)),
        cols=n,
    )
    for gen in gens:
        if any(projection.apply(gen)):
            raise errors.InvariantViolationError("projection misses a relation")
    return LatticeQuotient(
        ambient_rank=n,
        moduli=tuple(ambient_moduli),
        relation_gens=gens,
        rank=n - r,
        torsion=tuple(d for d in smith.divisors if d > 1),
        free_projection=projection,
        smith=smith,
    )


def lattice_member(
    target: Sequence[int],
    ambient_moduli: Sequence[int],
    relation_gens: Iterable[Sequence[int]],
) -> bool:
    """Whether ``target`` lies in ⟨relation_gens⟩ + moduli.

    >>> lattice_member((1, 0), (0, 0), [(2, 0), (0, 1)])
    False
    """
    return quotient_structure(ambient_moduli, relation_gens).contains(target)


def rational_rank(vectors: Iterable[Sequence[int]], length: int) -> int:
    """Dimension of the ℚ-span of ``vectors`` (each of the given length)."""
    return smith_normal_form(IntMatrix.from_rows(vectors, cols=length)).rank
