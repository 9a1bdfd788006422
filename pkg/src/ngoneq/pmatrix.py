"""Flip matrices: the exact matrix attached to one move, its extension over an
ambient triangulation, and products along a move sequence.

The matrix of a move has one row per created simplex and one column per
removed simplex. Rows are labelled by the c-vertices in descending order,
columns by the b-vertices in descending order, and the (i, j) entry is the
Lagrange basis ratio

    prod_{j' != j} (z[row_i] - z[col_j']) / prod_{j' != j} (z[col_j] - z[col_j'])

which makes every row sum to 1. The same entries can be written as
alternating-sign ratios of Vandermonde determinants over an interleaved
vertex frame; that form is kept as a cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInputError
from .exactfield import DenseMatrix, Rat, ZetaAssignment, vandermonde
from .simplicial import (
    MoveSequence,
    PachnerMove,
    Pair,
    Triangulation,
    apply_move,
    triangulation_path,
)


@dataclass(frozen=True)
class InterleavedFrame:
    """The interleaving a_1, ..., a_{n-1} of {1..n} \\ {q} behind a move.

    For odd n the odd positions a_1 < a_3 < ... hold the c-vertices and the
    even positions a_2 < a_4 < ... hold the b-vertices. For even n the odd
    positions a_1 < a_3 < ... < a_{n-3} hold the b-vertices while the
    c-vertices fill positions 2, 4, ..., n-2 and the last position n-1, all
    ascending.
    """

    n: int
    q: int
    a_seq: tuple[int, ...]

    @classmethod
    def from_move(cls, move: PachnerMove) -> "InterleavedFrame":
        n = move.n
        a = [0] * (n - 1)
        if n % 2 == 1:
            a[0::2] = move.c_set
            a[1::2] = move.b_set
        else:
            a[0:n - 3:2] = move.b_set
            a[1:n - 2:2] = move.c_set[:-1]
            a[n - 2] = move.c_set[-1]
        return cls(n, move.q, tuple(a))

    def at(self, k: int) -> int:
        """1-based access a_k."""
        return self.a_seq[k - 1]

    def row_vertices(self) -> list[int]:
        """Created-simplex partner vertices in row order (c descending)."""
        n = self.n
        if n % 2 == 1:
            return [self.at(n - 2 * i) for i in range(1, (n - 1) // 2 + 1)]
        return [self.at(n - 1)] + [self.at(n + 2 - 2 * i) for i in range(2, n // 2 + 1)]

    def col_vertices(self) -> list[int]:
        """Removed-simplex partner vertices in column order (b descending)."""
        n = self.n
        if n % 2 == 1:
            return [self.at(n + 1 - 2 * j) for j in range(1, (n - 1) // 2 + 1)]
        return [self.at(n - 1 - 2 * j) for j in range(1, n // 2)]

    def b_ascending(self) -> list[int]:
        n = self.n
        if n % 2 == 1:
            return [self.at(k) for k in range(2, n, 2)]
        return [self.at(k) for k in range(1, n - 2, 2)]


@dataclass(frozen=True)
class ActiveIndexMap:
    """Which pair each matrix row creates and each column consumes."""

    row_pairs: tuple[Pair, ...]
    col_pairs: tuple[Pair, ...]


def build_p_matrix(
    move: PachnerMove, zeta: ZetaAssignment
) -> tuple[DenseMatrix, ActiveIndexMap]:
    """The move matrix in Lagrange-product form, with its row/column labels.

    Shape is m x m for odd n and (m+1) x m for even n, where m = floor((n-1)/2).
    """
    if zeta.n != move.n:
        raise InvalidInputError(
            f"assignment is for n={zeta.n} but move is for n={move.n}"
        )
    frame = InterleavedFrame.from_move(move)
    rows = frame.row_vertices()
    cols = frame.col_vertices()
    entries = []
    for r in rows:
        row = []
        for j, cj in enumerate(cols):
            num = Fraction(1)
            den = Fraction(1)
            for j2, cj2 in enumerate(cols):
                if j2 != j:
                    num *= zeta[r] - zeta[cj2]
                    den *= zeta[cj] - zeta[cj2]
            row.append(num / den)
        entries.append(row)
    index_map = ActiveIndexMap(
        tuple(Pair.of(move.n, v, move.q) for v in rows),
        tuple(Pair.of(move.n, v, move.q) for v in cols),
    )
    return DenseMatrix(entries), index_map


def p_entry_vandermonde(
    move: PachnerMove, zeta: ZetaAssignment, i: int, j: int
) -> Rat:
    """The (i, j) entry (1-based) as a signed ratio of Vandermonde determinants.

    Must agree with the Lagrange form entrywise; used as an independent
    cross-check of build_p_matrix.
    """
    frame = InterleavedFrame.from_move(move)
    n = move.n
    b_asc = frame.b_ascending()
    if n % 2 == 1:
        row_vertex = frame.at(n - 2 * i)
        omitted = frame.at(n + 1 - 2 * j)
        sign = -1 if (j + (n - 1) // 2) % 2 else 1
    else:
        row_vertex = frame.at(n - 1) if i == 1 else frame.at(n + 2 - 2 * i)
        omitted = frame.at(n - 1 - 2 * j)
        sign = -1 if (j + n // 2 - 1) % 2 else 1
    numerator_args = [row_vertex] + [b for b in b_asc if b != omitted]
    value = vandermonde(numerator_args, zeta) / vandermonde(b_asc, zeta)
    return sign * value


def extend_matrix(
    move: PachnerMove,
    t_old: Triangulation,
    t_new: Triangulation,
    zeta: ZetaAssignment,
) -> DenseMatrix:
    """Pad the move matrix to |t_new| x |t_old| over the ambient triangulations.

    Every simplex untouched by the move contributes a single 1 at its
    (row, column) position; the active rows and columns carry the move matrix
    entries. Row and column order follow the canonical triangulation order.
    """
    if apply_move(t_old, move) != t_new:
        raise InvalidInputError("t_new is not the result of applying the move to t_old")
    p, index_map = build_p_matrix(move, zeta)
    row_of = {pair: k for k, pair in enumerate(t_new.pairs)}
    col_of = {pair: k for k, pair in enumerate(t_old.pairs)}
    out = [[Fraction(0)] * len(t_old) for _ in range(len(t_new))]
    for pair in set(t_old.pairs) & set(t_new.pairs):
        out[row_of[pair]][col_of[pair]] = Fraction(1)
    for i, row_pair in enumerate(index_map.row_pairs):
        for j, col_pair in enumerate(index_map.col_pairs):
            out[row_of[row_pair]][col_of[col_pair]] = p[i, j]
    return DenseMatrix(out)


def extended_matrices(seq: MoveSequence, zeta: ZetaAssignment) -> list[DenseMatrix]:
    """Extended matrix of every move along a sequence, in application order."""
    path = triangulation_path(seq)
    return [
        extend_matrix(move, path[k], path[k + 1], zeta)
        for k, move in enumerate(seq.moves)
    ]


def product_for_side(seq: MoveSequence, zeta: ZetaAssignment) -> DenseMatrix:
    """Product M_k ... M_1 of the extended matrices, the first-applied move
    rightmost (the matrices act from the left on stacked vectors)."""
    factors = extended_matrices(seq, zeta)
    product = factors[0]
    for factor in factors[1:]:
        product = factor.mul(product)
    return product
