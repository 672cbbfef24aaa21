import random

from hypothesis import given
from hypothesis import strategies as st

from polymod import CoeffQ
from polymod.linalg import (
    identity,
    is_zero_matrix,
    kernel_basis,
    mat_mul,
    mat_vec,
    rank,
    reduce_against,
    rref,
    solve,
    transpose,
)

entries = st.fractions(min_value=-5, max_value=5, max_denominator=3).map(CoeffQ.of)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda nc: st.lists(
            st.lists(entries, min_size=nc, max_size=nc), min_size=1, max_size=max_rows
        )
    )


def test_rref_known():
    m = [[CoeffQ.of(2), CoeffQ.of(4)], [CoeffQ.of(1), CoeffQ.of(2)]]
    rows, pivots = rref(m)
    assert pivots == [0]
    assert rows == [[CoeffQ.of(1), CoeffQ.of(2)]]


def test_rank_and_identity():
    assert rank(identity(4)) == 4
    assert rank([[CoeffQ.of(0)] * 3]) == 0
    assert is_zero_matrix([[CoeffQ.of(0)] * 2] * 2)
    assert not is_zero_matrix(identity(2))


def test_kernel_of_empty_and_zero():
    # no constraints: the kernel is everything
    basis = kernel_basis([], ncols=3)
    assert len(basis) == 3
    z = [[CoeffQ.of(0)] * 3]
    assert len(kernel_basis(z, ncols=3)) == 3


def test_solve_unique():
    m = [[CoeffQ.of(1), CoeffQ.of(1)], [CoeffQ.of(1), CoeffQ.of(-1)]]
    sol = solve(m, [CoeffQ.of(3), CoeffQ.of(1)])
    assert sol is not None
    values, free = sol
    assert not free
    assert values == [CoeffQ.of(2), CoeffQ.of(1)]


def test_solve_inconsistent():
    m = [[CoeffQ.of(1), CoeffQ.of(1)], [CoeffQ.of(2), CoeffQ.of(2)]]
    assert solve(m, [CoeffQ.of(1), CoeffQ.of(3)]) is None


def test_solve_reports_free_columns():
    m = [[CoeffQ.of(1), CoeffQ.of(1)]]
    sol = solve(m, [CoeffQ.of(5)])
    assert sol is not None
    values, free = sol
    assert free == [1]
    assert values[0] == CoeffQ.of(5) and values[1] == CoeffQ.of(0)


@given(matrices())
def test_rref_idempotent(m):
    rows, pivots = rref(m)
    again, pivots2 = rref([list(r) for r in rows])
    assert rows == again and pivots == pivots2


@given(matrices())
def test_kernel_annihilates(m):
    ncols = len(m[0])
    for v in kernel_basis(m, ncols=ncols):
        assert all(c.is_zero() for c in mat_vec(m, v))


@given(matrices())
def test_rank_respects_transpose(m):
    assert rank(m) == rank(transpose(m))


@given(matrices())
def test_solve_solutions_satisfy(m):
    rng = random.Random(7)
    x = [CoeffQ.of(rng.randint(-3, 3)) for _ in range(len(m[0]))]
    rhs = mat_vec(m, x)
    sol = solve(m, rhs)
    assert sol is not None  # consistent by construction
    values, _free = sol
    assert mat_vec(m, values) == rhs


@given(matrices())
def test_reduce_against_stays_in_span(m):
    rows, pivots = rref(m)
    if not rows:
        return
    vec = [sum((r[k] for r in rows), CoeffQ.of(0)) for k in range(len(m[0]))]
    residual, combo = reduce_against(vec, rows, pivots)
    assert all(c.is_zero() for c in residual)
    assert len(combo) == len(rows)


def test_mat_mul_associates():
    a = [[CoeffQ.of(1), CoeffQ.of(2)], [CoeffQ.of(0), CoeffQ.of(1)]]
    b = [[CoeffQ.of(3), CoeffQ.of(0)], [CoeffQ.of(1), CoeffQ.of(1)]]
    c = [[CoeffQ.of(1), CoeffQ.of(1)], [CoeffQ.of(1), CoeffQ.of(0)]]
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
