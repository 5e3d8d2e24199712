import random
from fractions import Fraction
from math import lcm

import pytest

from app.exceptions import ShapeMismatch, SingularMatrix
from app.modules.ratmat import (
    Matrix,
    OperationCounter,
    column_space_contains,
    complement_columns,
    hconcat,
    identity,
    inverse,
    matmul,
    rank,
    rref,
    solve,
)


def bareiss_rank(a: Matrix) -> int:
    """Fraction-free elimination on the row-wise integer rescaling of `a`."""
    rows = []
    for row in a.to_rows():
        scale = lcm(*(e.denominator for e in row)) if row else 1
        rows.append([int(e * scale) for e in row])
    m, n = a.shape
    previous, r = 1, 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                numerator = rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]
                assert numerator % previous == 0
                rows[i][j] = numerator // previous
            rows[i][c] = 0
        previous = rows[r][c]
        r += 1
    return r


def random_entry(rng: random.Random) -> Fraction:
    if rng.random() < 0.4:
        return Fraction(0)
    return Fraction(rng.randint(-3, 3), rng.randint(1, 3))


def random_matrix(rng: random.Random) -> Matrix:
    m, n = rng.randint(0, 6), rng.randint(0, 6)
    rows = []
    for _ in range(m):
        if rows and rng.random() < 0.3:
            a, b = rng.choice(rows), rng.choice(rows)
            s, t = Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2), rng.randint(1, 3))
            rows.append([s * x + t * y for x, y in zip(a, b)])
        else:
            rows.append([random_entry(rng) for _ in range(n)])
    return Matrix.from_rows(rows, cols=n)


def is_canonical_rref(r: Matrix, pivots: tuple[int, ...]) -> bool:
    for row, col in enumerate(pivots):
        if r[row, col] != 1 or any(r[row, c] for c in range(col)):
            return False
        if any(r[other, col] for other in range(r.rows) if other != row):
            return False
    if list(pivots) != sorted(set(pivots)):
        return False
    return all(not any(r.row(row)) for row in range(len(pivots), r.rows))


def test_rref_contract_on_random_matrices():
    rng = random.Random(20240607)
    for _ in range(500):
        a = random_matrix(rng)
        result = rref(a)

        assert matmul(result.E, a) == result.R
        assert rank(result.E) == a.rows
        assert is_canonical_rref(result.R, result.pivots)
        assert rref(result.R).R == result.R
        assert result.rank == len(result.pivots) == bareiss_rank(a)


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        q = Matrix.from_rows([[random_entry(rng) for _ in range(n)] for _ in range(n)], cols=n)
        if rank(q) == n:
            return q


def test_rref_is_invariant_under_row_transforms():
    rng = random.Random(31)
    for _ in range(200):
        a = random_matrix(rng)
        q = random_invertible(rng, a.rows)
        assert rref(matmul(q, a)).R == rref(a).R


@pytest.mark.parametrize(
    "rows,expected_r,expected_e,expected_rank",
    [
        ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3),
        ([[0, 0], [0, 0]], [[0, 0], [0, 0]], [[1, 0], [0, 1]], 0),
        ([[2, 4], [1, 2]], [[1, 2], [0, 0]], [["1/2", 0], ["-1/2", 1]], 1),
        ([[2, 4], [1, 3]], [[1, 0], [0, 1]], [["3/2", -2], ["-1/2", 1]], 2),
    ],
)
def test_rref_examples(rows, expected_r, expected_e, expected_rank):
    a = Matrix.from_rows(rows)
    result = rref(a)

    assert result.R == Matrix.from_rows(expected_r)
    assert result.E == Matrix.from_rows([[Fraction(e) for e in row] for row in expected_e])
    assert result.rank == expected_rank
    assert matmul(result.E, a) == result.R


@pytest.mark.parametrize(
    "rows,expected",
    [([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], 4), ([[1], [0]], 1), ([[1, 2], [2, 4], [3, 6]], 1)],
)
def test_rank_examples(rows, expected):
    assert rank(Matrix.from_rows(rows)) == expected


def test_rref_empty_shapes():
    for shape in [(0, 3), (3, 0), (0, 0)]:
        result = rref(Matrix.zeros(*shape))
        assert result.rank == 0
        assert result.R.shape == shape
        assert result.E == identity(shape[0])


def test_rref_counts_operations():
    counter = OperationCounter()
    result = rref(Matrix.from_rows([[0, 2], [3, 1]]), counter)

    assert (counter.row_ops, counter.arith_ops) == (result.row_ops, result.arith_ops)
    assert result.row_ops == 4
    assert result.arith_ops == 3 * 4


def test_rref_row_operations_bound():
    rng = random.Random(11)
    for _ in range(300):
        a = random_matrix(rng)
        m, n = a.shape
        result = rref(a)
        assert result.row_ops <= min(m, n) * (m + 1)
        assert result.row_ops <= 2 * m * m * n


def test_matmul_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        matmul(Matrix.zeros(2, 3), Matrix.zeros(2, 3))


def test_matrix_shape_law():
    with pytest.raises(ShapeMismatch):
        Matrix(2, 2, (1, 2, 3))
    with pytest.raises(ShapeMismatch):
        Matrix.from_rows([[1, 2], [3]])


def test_inverse():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert matmul(inverse(a), a) == identity(2)
    assert inverse(a) == Matrix.from_rows([[-2, 1], [Fraction(3, 2), Fraction(-1, 2)]])


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[1, 0], [0, 1]], [[1, 0], [0, 1]]),
        ([[2, 0], [0, "1/2"]], [["1/2", 0], [0, 2]]),
        ([[1, 1], [0, 1]], [[1, -1], [0, 1]]),
    ],
)
def test_inverse_examples(rows, expected):
    a = Matrix.from_rows([[Fraction(e) for e in row] for row in rows])
    assert inverse(a) == Matrix.from_rows([[Fraction(e) for e in row] for row in expected])
    assert matmul(a, inverse(a)) == identity(2)


def test_inverse_singular():
    with pytest.raises(SingularMatrix):
        inverse(Matrix.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(ShapeMismatch):
        inverse(Matrix.zeros(2, 3))


@pytest.mark.parametrize(
    "rows,cols,expected_cols",
    [([[1], [0]], 1, 1), ([[1, 0], [0, 1]], 2, 0), ([[0], [0], [0]], 1, 3), ([], 0, 0)],
)
def test_complement_columns(rows, cols, expected_cols):
    a = Matrix.from_rows(rows, cols=cols)
    complement = complement_columns(a)

    assert complement.shape == (a.rows, expected_cols)
    assert rank(hconcat(a, complement)) == a.rows


@pytest.mark.parametrize(
    "rows,cols,expected",
    [([[1], [0]], 1, [[0], [1]]), ([[1, 0], [0, 1]], 2, [[], []]), ([[0, 0], [0, 0]], 2, [[1, 0], [0, 1]])],
)
def test_complement_columns_examples(rows, cols, expected):
    complement = complement_columns(Matrix.from_rows(rows, cols=cols))
    assert complement == Matrix.from_rows(expected, cols=len(expected[0]))


def test_complement_columns_on_random_matrices():
    rng = random.Random(7)
    for _ in range(100):
        a = random_matrix(rng)
        complement = complement_columns(a)
        assert complement.cols == a.rows - rank(a)
        assert rank(hconcat(a, complement)) == a.rows


def test_solve_and_column_space():
    a = Matrix.from_rows([[1, 0], [0, 1], [1, 1]])

    assert solve(a, [2, 3, 5]) == [Fraction(2), Fraction(3)]
    assert solve(a, [2, 3, 4]) is None
    assert column_space_contains(a, [1, 1, 2])
    assert not column_space_contains(a, [1, 1, 1])


def test_transpose():
    a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert a.transpose() == Matrix.from_rows([[1, 4], [2, 5], [3, 6]])
    assert a.transpose().transpose() == a
