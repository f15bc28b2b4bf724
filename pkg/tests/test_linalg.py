"""Exact matrix engine: echelon form, rank, kernels."""

from fractions import Fraction

from nullvar.linalg import (
    Matrix,
    det,
    inverse,
    kernel_basis,
    matrix_from_json,
    matrix_to_json,
    rank,
    rref,
    solve_in_span,
)
from nullvar.seeds import Lcg


def test_rref_identity():
    m = Matrix.identity(3)
    red, pivots = rref(m)
    assert red == m
    assert pivots == (0, 1, 2)


def test_rref_zero():
    m = Matrix.zeros(2, 4)
    red, pivots = rref(m)
    assert red == m
    assert pivots == ()


def test_rref_rank_one():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    red, pivots = rref(m)
    assert red == Matrix.from_rows([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_idempotent():
    rng = Lcg(5)
    for _ in range(25):
        rows = [[rng.randint(-4, 4) for _ in range(5)] for _ in range(4)]
        m = Matrix.from_rows(rows)
        red, _ = rref(m)
        again, _ = rref(red)
        assert red == again


def test_kernel_one_equation():
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k == Matrix.from_rows([[1, -1]])


def test_kernel_identity_empty():
    k = kernel_basis(Matrix.identity(4))
    assert k.rows == 0 and k.cols == 4


def test_kernel_rank_one_canonical():
    k = kernel_basis(Matrix.from_rows([[1, 2], [2, 4]]))
    assert k == Matrix.from_rows([[1, Fraction(-1, 2)]])


def test_rank_examples():
    assert rank(Matrix.zeros(3, 5)) == 0
    assert rank(Matrix.identity(6)) == 6
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def _column_echelon_rank(m: Matrix) -> int:
    # independent oracle: plain forward elimination on columns of the transpose
    cols = [[m[i, j] for i in range(m.rows)] for j in range(m.cols)]
    r = 0
    for pos in range(m.rows):
        pivot = None
        for idx in range(r, len(cols)):
            if cols[idx][pos]:
                pivot = idx
                break
        if pivot is None:
            continue
        cols[r], cols[pivot] = cols[pivot], cols[r]
        for idx in range(r + 1, len(cols)):
            if cols[idx][pos]:
                f = cols[idx][pos] / cols[r][pos]
                for i in range(m.rows):
                    cols[idx][i] -= f * cols[r][i]
        r += 1
    return r


def test_rank_nullity_and_second_path():
    rng = Lcg(11)
    for _ in range(40):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        m = Matrix.from_rows([[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)])
        r = rank(m)
        assert r + kernel_basis(m).rows == ncols
        assert r == _column_echelon_rank(m)


def test_inverse_roundtrip():
    m = Matrix.from_rows([[2, 1, 0], [1, 3, 1], [0, 1, 1]])
    assert m @ inverse(m) == Matrix.identity(3)


def test_det_matches_elimination():
    m = Matrix.from_rows([[2, 1], [7, 4]])
    assert det(m) == 1
    singular = Matrix.from_rows([[1, 2], [2, 4]])
    assert det(singular) == 0


def test_solve_in_span():
    basis = Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
    sol = solve_in_span(basis, [2, 3, 5])
    assert sol == (Fraction(2), Fraction(3))
    assert solve_in_span(basis, [0, 0, 1]) is None


def test_matrix_json_roundtrip():
    m = Matrix.from_rows([[Fraction(1, 3), 2], [0, Fraction(-5, 7)]])
    data = matrix_to_json(m)
    assert data["entries"][0][0] == "1/3"
    assert matrix_from_json(data) == m
