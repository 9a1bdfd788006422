"""Invariant vectors attached to simplices.

Each simplex on vertex set S (|S| = n - 2) carries a length-n vector supported
on S whose components annihilate every power row (z_1^m, ..., z_n^m) for
m = 0 .. floor(n/2) - 1. The component at vertex v is a sum of reciprocal
difference products over floor(n/2)-subsets of S \\ {v}; the move matrices map
stacked old vectors exactly to stacked new vectors, which is what makes the
two sides of the polygon equation agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import InvalidInputError
from .exactfield import DenseMatrix, Rat, ZetaAssignment
from .pmatrix import build_p_matrix
from .simplicial import PachnerMove, Pair, Triangulation


def g_value(head: int, rest: Iterable[int], zeta: ZetaAssignment) -> Rat:
    """1 / prod_{r in rest} (z[head] - z[r]); symmetric in rest."""
    rest = list(rest)
    if head in rest or len(set(rest)) != len(rest):
        raise InvalidInputError("g_value requires pairwise distinct indices")
    denominator = Fraction(1)
    for r in rest:
        denominator *= zeta[head] - zeta[r]
    return 1 / denominator


def f_value(n: int, head: int, rest: Iterable[int], zeta: ZetaAssignment) -> Rat:
    """Sum of g_value(head, s) over all floor(n/2)-subsets s of rest.

    rest must list the other n-3 vertices of the simplex; subsets are
    enumerated in lexicographic order (the order is irrelevant to the sum
    but fixed for reproducibility).
    """
    rest = sorted(rest)
    if len(rest) != n - 3:
        raise InvalidInputError(f"rest must have {n - 3} vertices, got {len(rest)}")
    if head in rest or len(set(rest)) != len(rest):
        raise InvalidInputError("f_value requires pairwise distinct indices")
    k = n // 2
    total = Fraction(0)
    for subset in combinations(rest, k):
        total += g_value(head, subset, zeta)
    return total


@dataclass(frozen=True)
class FVector:
    """Length-n vector of a simplex: zero at the two omitted vertices."""

    n: int
    pair: Pair
    components: tuple[Rat, ...]

    def __getitem__(self, vertex: int) -> Rat:
        return self.components[vertex - 1]


def f_vector(n: int, pair: Pair, zeta: ZetaAssignment) -> FVector:
    """The invariant vector of the simplex named by the pair."""
    if pair.n != n or zeta.n != n:
        raise InvalidInputError("pair, assignment and n must agree")
    simplex = pair.simplex()
    components = [Fraction(0)] * n
    for v in simplex:
        components[v - 1] = f_value(n, v, [w for w in simplex if w != v], zeta)
    return FVector(n, pair, tuple(components))


def check_orthogonality(v: FVector, zeta: ZetaAssignment) -> bool:
    """True iff sum_r v_r * z_r^m = 0 exactly for m = 0 .. floor(n/2) - 1."""
    for m in range(v.n // 2):
        total = Fraction(0)
        for r in range(1, v.n + 1):
            total += v[r] * zeta[r] ** m
        if total != 0:
            return False
    return True


def stack_f_matrix(t: Triangulation, zeta: ZetaAssignment) -> DenseMatrix:
    """|t| x n matrix whose rows are the vectors of t's pairs in canonical order."""
    return DenseMatrix(
        [list(f_vector(t.n, pair, zeta).components) for pair in t.pairs]
    )


def check_move_action(move: PachnerMove, zeta: ZetaAssignment) -> bool:
    """True iff the move matrix maps the stacked removed-simplex vectors exactly
    to the stacked created-simplex vectors."""
    p, index_map = build_p_matrix(move, zeta)
    old_stack = DenseMatrix(
        [list(f_vector(move.n, pair, zeta).components) for pair in index_map.col_pairs]
    )
    new_stack = DenseMatrix(
        [list(f_vector(move.n, pair, zeta).components) for pair in index_map.row_pairs]
    )
    return p.mul(old_stack) == new_stack
