import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from ngoneq import (
    FVector,
    InvalidInputError,
    PachnerMove,
    Pair,
    Triangulation,
    ZetaAssignment,
    check_move_action,
    check_orthogonality,
    equation_sequences,
    f_value,
    f_vector,
    g_value,
    initial_triangulation,
    stack_f_matrix,
)
from ngoneq.verifier import max_stack_rank

CONSEC = {n: ZetaAssignment.consecutive(n) for n in range(5, 13)}


def frac(a, b=1):
    return Fraction(a, b)


# ---------------------------------------------------------------------------
# g and f scalars
# ---------------------------------------------------------------------------

def test_g_value_examples():
    z = CONSEC[5]
    assert g_value(1, [2, 3], z) == frac(1, 2)
    assert g_value(2, [1, 3], z) == frac(-1)


def test_g_value_symmetric_in_rest():
    z = ZetaAssignment.random_distinct(6, 2)
    for order in permutations([2, 4, 5, 6]):
        assert g_value(3, list(order), z) == g_value(3, [2, 4, 5, 6], z)


def test_g_value_rejects_repeats():
    with pytest.raises(InvalidInputError):
        g_value(1, [1, 2], CONSEC[5])
    with pytest.raises(InvalidInputError):
        g_value(1, [2, 2], CONSEC[5])


def test_g_family_annihilates_power_sums():
    """For a vertex set S of size s, the values g(v, S minus v) satisfy
    sum_v g_v * z_v^m = 0 for m = 0..s-2; these are the family sizes the
    subset sums of f_value draw on for ambient sizes up to 12."""
    z = CONSEC[12]
    rng = random.Random(23)
    for s in range(3, 8):
        for _ in range(3):
            vertices = sorted(rng.sample(range(1, 13), s))
            for m in range(s - 1):
                total = sum(
                    g_value(v, [w for w in vertices if w != v], z) * z[v] ** m
                    for v in vertices
                )
                assert total == 0, (vertices, m)


def test_f_reduces_to_g_for_n5_and_n6():
    """floor(n/2) equals n-3 for n = 5, 6, so the subset sum has one term."""
    z5, z6 = CONSEC[5], CONSEC[6]
    assert f_value(5, 1, [2, 3], z5) == g_value(1, [2, 3], z5)
    assert f_value(6, 1, [2, 3, 4], z6) == g_value(1, [2, 3, 4], z6)
    assert f_value(6, 1, [2, 3, 4], z6) == frac(-1, 6)


def test_f_n7_is_sum_of_g_over_omissions():
    z = CONSEC[7]
    rest = [2, 3, 4, 5]
    expected = sum(
        g_value(1, [r for r in rest if r != omit], z) for omit in rest
    )
    assert f_value(7, 1, rest, z) == expected


def test_f_value_validates_rest_length():
    with pytest.raises(InvalidInputError):
        f_value(7, 1, [2, 3, 4], CONSEC[7])


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------

def test_pentagon_vector_of_triangle_123():
    v = f_vector(5, Pair(4, 5, 5), CONSEC[5])
    assert v.components == (frac(1, 2), frac(-1), frac(1, 2), frac(0), frac(0))
    assert sum(v.components) == 0


def test_hexagon_vector_matches_reciprocal_products():
    z = CONSEC[6]
    v = f_vector(6, Pair(5, 6, 6), z)
    for vertex in (1, 2, 3, 4):
        others = [w for w in (1, 2, 3, 4) if w != vertex]
        expected = 1 / (
            (z[vertex] - z[others[0]])
            * (z[vertex] - z[others[1]])
            * (z[vertex] - z[others[2]])
        )
        assert v[vertex] == expected
    assert v[5] == 0 and v[6] == 0


def test_vector_zero_positions_match_pair():
    """The two omitted vertices carry exact zeros. On-simplex components may
    vanish accidentally at symmetric assignments, so only nonzero-overall is
    asserted there."""
    for n in (5, 8, 11):
        for i, j in ((1, 2), (2, n), (n - 1, n)):
            v = f_vector(n, Pair(i, j, n), CONSEC[n])
            assert v[i] == 0 and v[j] == 0
            assert any(v[w] != 0 for w in range(1, n + 1))


def test_orthogonality_all_pairs_small_n():
    for n in (5, 6, 7, 8):
        z = CONSEC[n]
        for i, j in combinations(range(1, n + 1), 2):
            assert check_orthogonality(f_vector(n, Pair(i, j, n), z), z)


def test_orthogonality_trivial_vectors():
    z = CONSEC[5]
    zero = FVector(5, Pair(4, 5, 5), (frac(0),) * 5)
    assert check_orthogonality(zero, z)
    spike = FVector(5, Pair(4, 5, 5), (frac(1), frac(0), frac(0), frac(0), frac(0)))
    assert not check_orthogonality(spike, z)


# ---------------------------------------------------------------------------
# stacks and ranks
# ---------------------------------------------------------------------------

def test_stack_shape_and_single_row_rank():
    z = CONSEC[5]
    t = Triangulation.from_pairs(5, [Pair(4, 5, 5)])
    stack = stack_f_matrix(t, z)
    assert stack.shape == (1, 5)
    assert stack.rank() == 1


def test_initial_stack_ranks():
    """The stacked vectors always achieve the largest rank the orthogonality
    constraints allow: min(row count, n - floor(n/2)). For n >= 7 the row
    count exceeds that ceiling, so the stack cannot have full row rank."""
    expected = {5: 3, 6: 3, 7: 4, 8: 4, 9: 5, 10: 5, 11: 6, 12: 6}
    for n in range(5, 13):
        t = initial_triangulation(n)
        rank = stack_f_matrix(t, CONSEC[n]).rank()
        assert rank == expected[n]
        assert rank == min(len(t), max_stack_rank(n))


# ---------------------------------------------------------------------------
# move action
# ---------------------------------------------------------------------------

def test_pentagon_move_action_explicit():
    """The quadrilateral-1234 move matrix maps the stacked vectors of 123 and
    134 to those of 124 and 234."""
    from ngoneq import build_p_matrix, DenseMatrix

    z = CONSEC[5]
    move = PachnerMove(5, 5, (2, 4), (1, 3))
    p, index_map = build_p_matrix(move, z)
    assert [pr.simplex() for pr in index_map.col_pairs] == [(1, 2, 3), (1, 3, 4)]
    assert [pr.simplex() for pr in index_map.row_pairs] == [(1, 2, 4), (2, 3, 4)]
    old = DenseMatrix([
        list(f_vector(5, Pair(4, 5, 5), z).components),
        list(f_vector(5, Pair(2, 5, 5), z).components),
    ])
    new = DenseMatrix([
        list(f_vector(5, Pair(3, 5, 5), z).components),
        list(f_vector(5, Pair(1, 5, 5), z).components),
    ])
    assert p.mul(old) == new
    assert check_move_action(move, z)


def test_hexagon_and_heptagon_move_action():
    assert check_move_action(PachnerMove(6, 6, (1, 3), (2, 4, 5)), CONSEC[6])
    assert check_move_action(PachnerMove(7, 7, (2, 4, 6), (1, 3, 5)), CONSEC[7])


def test_move_action_along_sequences():
    for n in (5, 6, 7, 8):
        for seq in equation_sequences(n):
            for move in seq.moves:
                assert check_move_action(move, CONSEC[n])


def test_move_action_at_random_assignment():
    z = ZetaAssignment.random_distinct(6, 31)
    for seq in equation_sequences(6):
        for move in seq.moves:
            assert check_move_action(move, z)
