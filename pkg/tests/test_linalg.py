import random

import pytest

from darseq.linalg import (
    FieldSpec,
    Matrix,
    rref,
    rank,
    solve,
    kernel_basis,
    inverse,
    is_invertible,
)
from darseq.errors import ValidationError

Q = FieldSpec.rationals()
F5 = FieldSpec.prime(5)


def M(data, field=Q, cols=None):
    return Matrix.from_rows(data, field, cols=cols)


def test_fieldspec_rejects_composite():
    with pytest.raises(ValidationError):
        FieldSpec.prime(6)


def test_field_literals():
    assert Q.of("3/4") * 4 == 3
    assert F5.of("1/2") == 3  # 2 * 3 = 6 = 1 mod 5
    assert F5.of(-1) == 4


def test_rref_identity():
    ech, pivots, rk = rref(Matrix.identity(2, Q))
    assert ech == Matrix.identity(2, Q)
    assert pivots == [0, 1]
    assert rk == 2


def test_rref_zero():
    ech, pivots, rk = rref(Matrix.zeros(3, 2, Q))
    assert ech.is_zero()
    assert pivots == []
    assert rk == 0


def test_rref_f5_dependent_rows():
    # row2 = 3 * row1 mod 5
    ech, pivots, rk = rref(M([[2, 4], [1, 2]], F5))
    assert rk == 1
    assert pivots == [0]
    assert ech.data[0] == [1, 2]


def test_solve_identity():
    b = M([[7], [9]])
    assert solve(Matrix.identity(2, Q), b) == b


def test_solve_inconsistent():
    assert solve(Matrix.zeros(2, 2, Q), M([[1], [0]])) is None


def test_solve_upper_triangular():
    a = M([[1, 1], [0, 1]])
    x = solve(a, M([[3], [1]]))
    assert x == M([[2], [1]])
    assert a * x == M([[3], [1]])


def test_kernel_identity_empty():
    k = kernel_basis(Matrix.identity(3, Q))
    assert k.cols == 0


def test_kernel_zero_full():
    k = kernel_basis(Matrix.zeros(4, 4, F5))
    assert k.cols == 4


def test_kernel_single_relation():
    k = kernel_basis(M([[1, 2]]))
    assert k.cols == 1
    # (-2, 1) up to scalar
    assert k.data[0][0] * 1 == -2 * k.data[1][0]


def _random_matrix(rng, rows, cols, field):
    return Matrix.from_rows(
        [[rng.randrange(-4, 5) for _ in range(cols)] for _ in range(rows)], field
    )


@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_rank_transpose_and_nullity(field):
    rng = random.Random(42)
    for _ in range(30):
        rows, cols = rng.randrange(1, 6), rng.randrange(1, 6)
        m = _random_matrix(rng, rows, cols, field)
        rk = rank(m)
        assert rk == rank(m.transpose())
        k = kernel_basis(m)
        assert k.cols == cols - rk
        assert (m * k).is_zero()
        assert rank(k) == k.cols  # columns independent


@pytest.mark.parametrize("field", [Q, F5], ids=["Q", "F5"])
def test_solvability_matches_rank_criterion(field):
    rng = random.Random(7)
    for _ in range(40):
        rows, cols = rng.randrange(1, 5), rng.randrange(1, 5)
        a = _random_matrix(rng, rows, cols, field)
        b = _random_matrix(rng, rows, 1, field)
        x = solve(a, b)
        consistent = rank(a.hstack(b)) == rank(a)
        assert (x is not None) == consistent
        if x is not None:
            assert a * x == b


def test_inverse_round_trip():
    a = M([[2, 1], [1, 1]], F5)
    assert is_invertible(a)
    inv = inverse(a)
    assert a * inv == Matrix.identity(2, F5)
    assert inverse(M([[1, 1], [1, 1]], F5)) is None
