from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from gitstab.linalg import integer_kernel, primitive, project_out, rank, rational_to_primitive, solve_left

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(2, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-5, 5), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_kernel_is_annihilated_and_has_full_rank(rows):
    n = len(rows[0])
    ker = integer_kernel(rows, n)
    A = np.array(rows)
    for v in ker:
        assert not (A @ np.array(v)).any()
    assert len(ker) == n - np.linalg.matrix_rank(A)
    if ker:
        assert np.linalg.matrix_rank(np.array(ker)) == len(ker)


@given(matrices)
def test_rank_matches_numpy(rows):
    assert rank(rows) == np.linalg.matrix_rank(np.array(rows))


@given(matrices, st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve_left_reconstructs_combinations(rows, coef):
    coef = coef[: len(rows)]
    target = [sum(c * r[j] for c, r in zip(coef, rows)) for j in range(len(rows[0]))]
    z = solve_left(rows, [Fraction(t) for t in target])
    assert z is not None
    assert [sum(zi * r[j] for zi, r in zip(z, rows)) for j in range(len(rows[0]))] == target


def test_primitive_and_rational_scaling():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)
    assert rational_to_primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)


def test_projection_is_orthogonal():
    p = project_out((3, 1, -4), [(1, -1, 0)])
    assert sum(a * b for a, b in zip(p, (1, -1, 0))) == 0
    assert p == [Fraction(2), Fraction(2), Fraction(-4)]
