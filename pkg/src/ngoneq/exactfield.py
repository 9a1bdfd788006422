"""Exact rational scalars, distinct-value assignments, Vandermonde determinants,
and dense exact linear algebra.

Every quantity in this package is a ``fractions.Fraction`` (arbitrary-precision
numerator/denominator, always in lowest terms), so all comparisons are exact and
no tolerances appear anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidInputError

Rat = Fraction

RANDOM_VALUE_RANGE = (1, 10**6)


def rat_from_string(text: str) -> Rat:
    """Parse "p/q" (or plain "p") into an exact rational."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"not a valid rational: {text!r}") from exc


def rat_to_string(value: Rat) -> str:
    """Format as "p/q", omitting the denominator when it is 1."""
    return str(value)


@dataclass(frozen=True)
class ZetaAssignment:
    """Pairwise-distinct rational values, one per vertex 1..n.

    Indexing is 1-based to match vertex labels: ``zeta[r]`` is the value at
    vertex ``r``.
    """

    n: int
    values: tuple[Rat, ...]
    label: str = field(default="explicit", compare=False)  # description only

    def __post_init__(self) -> None:
        if self.n < 1 or len(self.values) != self.n:
            raise InvalidInputError(
                f"expected {self.n} values, got {len(self.values)}"
            )
        if len(set(self.values)) != self.n:
            raise InvalidInputError("assignment values must be pairwise distinct")

    def __getitem__(self, vertex: int) -> Rat:
        if not 1 <= vertex <= self.n:
            raise InvalidInputError(f"vertex {vertex} out of range 1..{self.n}")
        return self.values[vertex - 1]

    @classmethod
    def consecutive(cls, n: int) -> "ZetaAssignment":
        """The default assignment: vertex r gets the integer r."""
        return cls(n, tuple(Fraction(r) for r in range(1, n + 1)), label="consecutive")

    @classmethod
    def random_distinct(cls, n: int, seed: int) -> "ZetaAssignment":
        """Seeded distinct integers drawn from RANDOM_VALUE_RANGE."""
        rng = random.Random(seed)
        lo, hi = RANDOM_VALUE_RANGE
        values = rng.sample(range(lo, hi + 1), n)
        return cls(n, tuple(Fraction(v) for v in values), label=f"seed:{seed}")

    @classmethod
    def from_strings(cls, texts: list[str]) -> "ZetaAssignment":
        return cls(len(texts), tuple(rat_from_string(t) for t in texts))

    def to_strings(self) -> list[str]:
        return [rat_to_string(v) for v in self.values]


def vandermonde(indices: list[int] | tuple[int, ...], zeta: ZetaAssignment) -> Rat:
    """Determinant of the moment matrix whose columns are (1, z, z^2, ...) at the
    given vertices, taken in the given column order.

    For ascending indices this is the product of (z_later - z_earlier) over all
    pairs; an arbitrary order contributes the sign of the permutation that sorts
    it. Nonzero whenever the indices are distinct.
    """
    if not indices:
        raise InvalidInputError("vandermonde requires at least one index")
    if len(set(indices)) != len(indices):
        raise InvalidInputError(f"duplicate index in {indices}")
    for i in indices:
        if not 1 <= i <= zeta.n:
            raise InvalidInputError(f"index {i} out of range 1..{zeta.n}")
    inversions = sum(
        1
        for p in range(len(indices))
        for q in range(p + 1, len(indices))
        if indices[p] > indices[q]
    )
    ordered = sorted(indices)
    det = Fraction(1) if inversions % 2 == 0 else Fraction(-1)
    for p in range(len(ordered)):
        for q in range(p + 1, len(ordered)):
            det *= zeta[ordered[q]] - zeta[ordered[p]]
    return det


class DenseMatrix:
    """Immutable dense matrix of exact rationals, stored as a tuple of row tuples."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: list[list[Rat]] | tuple[tuple[Rat, ...], ...]):
        self.entries: tuple[tuple[Rat, ...], ...] = tuple(
            tuple(Fraction(x) for x in row) for row in entries
        )
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.rows else 0
        if any(len(row) != self.cols for row in self.entries):
            raise InvalidInputError("ragged rows in matrix")

    # ---- constructors -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls(
            [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "DenseMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    # ---- basic queries ------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> Rat:
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(rat_to_string(x) for x in row) for row in self.entries
        )
        return f"DenseMatrix({self.rows}x{self.cols}: {body})"

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def row_sums(self) -> list[Rat]:
        return [sum(row, Fraction(0)) for row in self.entries]

    def with_entry(self, i: int, j: int, value: Rat) -> "DenseMatrix":
        """Copy of this matrix with one entry replaced."""
        rows = [list(row) for row in self.entries]
        rows[i][j] = Fraction(value)
        return DenseMatrix(rows)

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    # ---- arithmetic ---------------------------------------------------

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        """Exact matrix product self @ other."""
        if self.cols != other.rows:
            raise InvalidInputError(
                f"dimension mismatch: {self.rows}x{self.cols} times {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = Fraction(0)
                for k in range(self.cols):
                    acc += self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return DenseMatrix(out)

    __matmul__ = mul

    def rank(self) -> int:
        """Exact rank by Gaussian elimination over the rationals.

        Pivots on the first nonzero entry in each column; no magnitude
        pivoting is needed since the arithmetic is exact.
        """
        work = [list(row) for row in self.entries]
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if work[i][c] != 0), None)
            if pivot_row is None:
                continue
            work[r], work[pivot_row] = work[pivot_row], work[r]
            pivot = work[r][c]
            for i in range(r + 1, self.rows):
                if work[i][c] != 0:
                    factor = work[i][c] / pivot
                    for j in range(c, self.cols):
                        work[i][j] -= factor * work[r][j]
            r += 1
            if r == self.rows:
                break
        return r

    def det(self) -> Rat:
        """Exact determinant (square matrices only)."""
        if self.rows != self.cols:
            raise InvalidInputError("determinant requires a square matrix")
        work = [list(row) for row in self.entries]
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if work[i][c] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                work[c], work[pivot_row] = work[pivot_row], work[c]
                det = -det
            pivot = work[c][c]
            det *= pivot
            for i in range(c + 1, n):
                if work[i][c] != 0:
                    factor = work[i][c] / pivot
                    for j in range(c, n):
                        work[i][j] -= factor * work[c][j]
        return det

    # ---- serialization ------------------------------------------------

    def to_json_rows(self) -> list[list[str]]:
        """2-D array of "p/q" strings (row-major)."""
        return [[rat_to_string(x) for x in row] for row in self.entries]

    @classmethod
    def from_json_rows(cls, rows: list[list[str]]) -> "DenseMatrix":
        return cls([[rat_from_string(x) for x in row] for row in rows])

    def to_latex(self) -> str:
        """Render as a LaTeX array with \\frac{p}{q} entries."""
        lines = ["\\left(\\begin{array}{%s}" % ("c" * self.cols)]
        for row in self.entries:
            lines.append(" & ".join(_latex_rat(x) for x in row) + " \\\\")
        lines.append("\\end{array}\\right)")
        return "\n".join(lines)


def _latex_rat(value: Rat) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


# Thin functional aliases over the DenseMatrix methods.

def mat_mul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    return a.mul(b)


def mat_eq(a: DenseMatrix, b: DenseMatrix) -> bool:
    return a.shape == b.shape and a.entries == b.entries


def mat_rank(a: DenseMatrix) -> int:
    return a.rank()
