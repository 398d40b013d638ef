from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gaudin.linalg import (in_row_space, mat_inverse, mat_mul, nullspace,
                           rank, rref, solve)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=8)


def matrices(rows, cols):
    return st.lists(st.lists(rationals, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


@given(matrices(3, 4))
@settings(max_examples=50, deadline=None)
def test_rref_is_idempotent(m):
    r1, p1 = rref(m)
    r2, p2 = rref([row for row in r1 if any(row)])
    assert [row for row in r1 if any(row)] == [row for row in r2 if any(row)]
    assert p1 == p2


@given(matrices(3, 4))
@settings(max_examples=50, deadline=None)
def test_rows_lie_in_their_own_row_space(m):
    r, p = rref(m)
    for row in m:
        assert in_row_space(r, p, row)


@given(matrices(3, 4))
@settings(max_examples=50, deadline=None)
def test_nullspace_annihilates(m):
    for v in nullspace(m, 4):
        for row in m:
            assert sum(a * b for a, b in zip(row, v)) == 0
    assert rank(m) + len(nullspace(m, 4)) == 4


@given(matrices(3, 3), st.lists(rationals, min_size=3, max_size=3))
@settings(max_examples=50, deadline=None)
def test_solve_satisfies_system(m, rhs):
    x = solve(m, rhs)
    if x is None:
        return
    for row, b in zip(m, rhs):
        assert sum(a * c for a, c in zip(row, x)) == b


def test_mat_inverse():
    m = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert mat_mul(m, mat_inverse(m)) == [[1, 0], [0, 1]]
