"""
Exact rational matrices and the row-reduction kernels every freeness check is built on.

Scalars are `fractions.Fraction`, which keeps numerator and denominator coprime with a positive denominator after
every operation, so zero is always `0/1` and comparisons are exact. Matrices are immutable and row-major; empty
shapes (0 x n, n x 0) are legal and stand for maps to or from the zero space.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from app.exceptions import ShapeMismatch, SingularMatrix

logger = logging.getLogger(__name__)

Scalar = Union[Fraction, int]

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Matrix:
    """
    Dense exact-rational matrix.

    Args:
        rows (int): Number of rows.
        cols (int): Number of columns.
        entries (tuple[Fraction, ...]): Row-major entries, `rows * cols` of them.
    """

    rows: int
    cols: int
    entries: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        """Coerce entries to fractions and check the shape law."""
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch(f"Negative shape {self.rows}x{self.cols}")
        entries = tuple(Fraction(e) for e in self.entries)
        if len(entries) != self.rows * self.cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "Matrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows (Sequence[Sequence[Scalar]]): The rows; all must have the same length.
            cols (int, optional): Column count, required to describe a matrix with no rows.

        Returns:
            Matrix: The matrix.
        """
        widths = {len(row) for row in rows}
        if len(widths) > 1:
            raise ShapeMismatch(f"Ragged rows of lengths {sorted(widths)}")
        width = widths.pop() if widths else (cols or 0)
        if cols is not None and width != cols:
            raise ShapeMismatch(f"Rows have {width} columns, expected {cols}")
        return cls(len(rows), width, tuple(e for row in rows for e in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "Matrix":
        """
        Build a matrix whose columns are the given vectors.

        Args:
            columns (Sequence[Sequence[Scalar]]): Column vectors, each of length `rows`.
            rows (int): Row count, needed when there are no columns.

        Returns:
            Matrix: The `rows x len(columns)` matrix.
        """
        if any(len(column) != rows for column in columns):
            raise ShapeMismatch(f"Column vectors must have length {rows}")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        """The all-zero `rows x cols` matrix."""
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        """`(rows, cols)`."""
        return self.rows, self.cols

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        """Entry at `(i, j)`."""
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        """Row `i` as a tuple."""
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Fraction, ...]:
        """Column `j` as a tuple."""
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        """Mutable copy of the rows."""
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple[Fraction, ...]]:
        """All columns, left to right."""
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        """Whether every entry vanishes."""
        return not any(self.entries)

    def transpose(self) -> "Matrix":
        """The transposed matrix."""
        return Matrix.from_columns([self.row(i) for i in range(self.rows)], self.cols)

    def select_columns(self, indices: Iterable[int]) -> "Matrix":
        """Submatrix made of the given columns, in the given order."""
        return Matrix.from_columns([self.column(j) for j in indices], self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        """Matrix product, as `matmul`."""
        return matmul(self, other)


@dataclass
class OperationCounter:
    """
    Running totals of the work done by `rref`.

    Attributes:
        row_ops (int): Elementary row operations (swaps, scalings, row additions).
        arith_ops (int): Entry-level multiply/add updates performed by those row operations.
    """

    row_ops: int = 0
    arith_ops: int = 0

    def add(self, row_ops: int, arith_ops: int) -> None:
        """Add the work of one reduction to the totals."""
        self.row_ops += row_ops
        self.arith_ops += arith_ops


@dataclass(frozen=True)
class RrefResult:
    """
    Canonical reduced row echelon form of a matrix together with the recorded row transform.

    Attributes:
        R (Matrix): The reduced row echelon form.
        E (Matrix): Square invertible transform with `E @ A == R`.
        rank (int): Number of nonzero rows of `R`.
        pivots (tuple[int, ...]): Pivot column of each nonzero row.
        row_ops (int): Elementary row operations performed.
        arith_ops (int): Entry updates performed.
    """

    R: Matrix
    E: Matrix
    rank: int
    pivots: tuple[int, ...]
    row_ops: int = 0
    arith_ops: int = 0


def identity(n: int) -> Matrix:
    """The `n x n` identity; `identity(0)` is the empty matrix."""
    return Matrix(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """
    Exact matrix product.

    Args:
        a (Matrix): Left factor, `m x k`.
        b (Matrix): Right factor, `k x n`.

    Returns:
        Matrix: The `m x n` product.

    Raises:
        ShapeMismatch: If `a.cols != b.rows`.
    """
    if a.cols != b.rows:
        raise ShapeMismatch(f"Cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_columns = b.columns()
    return Matrix(
        a.rows,
        b.cols,
        tuple(sum((x * y for x, y in zip(a.row(i), column)), ZERO) for i in range(a.rows) for column in b_columns),
    )


def hconcat(a: Matrix, b: Matrix) -> Matrix:
    """
    Place `b` to the right of `a`.

    Raises:
        ShapeMismatch: If the row counts differ.
    """
    if a.rows != b.rows:
        raise ShapeMismatch(f"Cannot concatenate {a.rows}x{a.cols} with {b.rows}x{b.cols}")
    return Matrix(a.rows, a.cols + b.cols, tuple(e for i in range(a.rows) for e in a.row(i) + b.row(i)))


def rref(a: Matrix, counter: Optional[OperationCounter] = None) -> RrefResult:
    """
    Gauss-Jordan elimination to the canonical reduced row echelon form, recording the row transform.

    Columns are scanned left to right; the first unused row (top-down) with a nonzero entry becomes the pivot row,
    is swapped into place, normalized, and the column is cleared in every other row. The same operations are applied
    to an identity matrix to obtain `E`.

    Args:
        a (Matrix): Any well-formed matrix, possibly empty.
        counter (OperationCounter, optional): Accumulates the work done.

    Returns:
        RrefResult: `R`, `E`, rank and pivot columns, with operation counts.
    """
    m, n = a.shape
    reduced = a.to_rows()
    transform = identity(m).to_rows()
    pivots: list[int] = []
    row_ops = 0
    arith_ops = 0
    width = n + m

    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        source = next((r for r in range(pivot_row, m) if reduced[r][col]), None)
        if source is None:
            continue
        if source != pivot_row:
            reduced[pivot_row], reduced[source] = reduced[source], reduced[pivot_row]
            transform[pivot_row], transform[source] = transform[source], transform[pivot_row]
            row_ops += 1
        pivot = reduced[pivot_row][col]
        if pivot != ONE:
            reduced[pivot_row] = [e / pivot for e in reduced[pivot_row]]
            transform[pivot_row] = [e / pivot for e in transform[pivot_row]]
            row_ops += 1
            arith_ops += width
        for r in range(m):
            factor = reduced[r][col]
            if r == pivot_row or not factor:
                continue
            reduced[r] = [x - factor * y for x, y in zip(reduced[r], reduced[pivot_row])]
            transform[r] = [x - factor * y for x, y in zip(transform[r], transform[pivot_row])]
            row_ops += 1
            arith_ops += width
        pivots.append(col)
        pivot_row += 1

    if counter is not None:
        counter.add(row_ops, arith_ops)
    logger.debug("rref %dx%d: rank %d, %d row operations", m, n, pivot_row, row_ops)

    return RrefResult(
        R=Matrix.from_rows(reduced, cols=n),
        E=Matrix.from_rows(transform, cols=m),
        rank=pivot_row,
        pivots=tuple(pivots),
        row_ops=row_ops,
        arith_ops=arith_ops,
    )


def rank(a: Matrix, counter: Optional[OperationCounter] = None) -> int:
    """Rank of `a`, the number of pivots of its reduced form."""
    return rref(a, counter).rank


def inverse(a: Matrix, counter: Optional[OperationCounter] = None) -> Matrix:
    """
    Exact inverse of a square matrix.

    Raises:
        ShapeMismatch: If `a` is not square.
        SingularMatrix: If the rank is below the size.
    """
    if a.rows != a.cols:
        raise ShapeMismatch(f"Cannot invert a {a.rows}x{a.cols} matrix")
    result = rref(a, counter)
    if result.rank < a.rows:
        raise SingularMatrix(f"Rank {result.rank} < {a.rows}")
    return result.E


def complement_columns(a: Matrix, counter: Optional[OperationCounter] = None) -> Matrix:
    """
    Columns completing the column space of `a` to a basis of the whole target space.

    With `E @ a = R` and `r = rank(a)`, the last `n - r` rows of `R` vanish, so the column space of `a` sits inside
    `E^-1` applied to the first `r` coordinate vectors; the remaining columns of `E^-1` complete it.

    Args:
        a (Matrix): An `n x k` matrix.
        counter (OperationCounter, optional): Accumulates the work done.

    Returns:
        Matrix: An `n x (n - r)` matrix; `n x 0` when `a` is surjective.
    """
    return complement_from_rref(rref(a, counter), counter)


def complement_from_rref(result: RrefResult, counter: Optional[OperationCounter] = None) -> Matrix:
    """`complement_columns` for a matrix whose reduction is already known."""
    n = result.E.rows
    if result.rank == n:
        return Matrix.zeros(n, 0)
    return inverse(result.E, counter).select_columns(range(result.rank, n))


def column_space_contains(a: Matrix, vector: Sequence[Scalar]) -> bool:
    """Whether `vector` is a linear combination of the columns of `a`."""
    return rank(hconcat(a, Matrix.from_columns([vector], a.rows))) == rank(a)


def solve(a: Matrix, vector: Sequence[Scalar]) -> Optional[list[Fraction]]:
    """
    One exact solution `x` of `a @ x = vector`, with free variables set to zero.

    Returns:
        Optional[list[Fraction]]: The solution, or None when the system is inconsistent.
    """
    if len(vector) != a.rows:
        raise ShapeMismatch(f"Right-hand side of length {len(vector)} for {a.rows} rows")
    result = rref(a)
    reduced_rhs = matmul(result.E, Matrix.from_columns([vector], a.rows)).column(0) if a.rows else ()
    if any(reduced_rhs[result.rank :]):
        return None
    solution = [ZERO] * a.cols
    for row, col in enumerate(result.pivots):
        solution[col] = reduced_rhs[row]
    return solution
