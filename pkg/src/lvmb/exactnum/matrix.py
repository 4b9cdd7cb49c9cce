"""Small dense matrices over Q and Q[i].

The elimination routines are written against the field operations only, so they
work unchanged on lists of :class:`~fractions.Fraction` or of
:class:`GaussianRational`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .gaussian import ONE, ZERO, GaussianRational, gr


class DimensionError(ValueError):
    """Shapes do not fit the operation."""


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix whose determinant is exactly zero."""

    def __init__(self, message: str = "matrix is singular", det=0):
        super().__init__(message)
        self.det = det


def _is_zero(x) -> bool:
    return x == 0


def determinant(rows: Sequence[Sequence]) -> object:
    """Exact determinant by Gaussian elimination with first-nonzero pivoting."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    det = None
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(a[r][col])), None)
        if piv is None:
            return a[0][0] * 0
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        p = a[col][col]
        det = p if det is None else det * p
        for r in range(col + 1, n):
            if _is_zero(a[r][col]):
                continue
            factor = a[r][col] / p
            row_r, row_c = a[r], a[col]
            for c in range(col + 1, n):
                row_r[c] = row_r[c] - factor * row_c[c]
    return det if sign == 1 else -det


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rectangular matrix."""
    a = [list(r) for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(a)) if not _is_zero(a[i][col])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        for i in range(r + 1, len(a)):
            if _is_zero(a[i][col]):
                continue
            factor = a[i][col] / p
            for c in range(col, ncols):
                a[i][c] = a[i][c] - factor * a[r][c]
        r += 1
        if r == len(a):
            break
    return r


def solve(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows) or len(rhs) != n:
        raise DimensionError("solve needs a square system")
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not _is_zero(a[r][col])), None)
        if piv is None:
            raise SingularMatrixError()
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and not _is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


class CMatrix:
    """An immutable rectangular matrix with entries in Q[i]."""

    __slots__ = ("_entries", "rows", "cols")

    def __init__(self, entries: Iterable[Iterable]):
        grid = tuple(tuple(gr(x) for x in row) for row in entries)
        if not grid:
            raise DimensionError("empty matrix")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionError("ragged matrix")
        self._entries = grid
        self.rows = len(grid)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "CMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @property
    def entries(self) -> tuple[tuple[GaussianRational, ...], ...]:
        return self._entries

    def __getitem__(self, ij):
        i, j = ij
        return self._entries[i][j]

    def row(self, i: int) -> tuple[GaussianRational, ...]:
        return self._entries[i]

    def column(self, j: int) -> tuple[GaussianRational, ...]:
        return tuple(row[j] for row in self._entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        return isinstance(other, CMatrix) and self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._entries)
        return f"CMatrix([{body}])"

    def __add__(self, other: "CMatrix") -> "CMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        return CMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)])

    def __matmul__(self, other):
        if isinstance(other, CMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = [other.column(j) for j in range(other.cols)]
            return CMatrix([[_dot(r, c) for c in cols] for r in self._entries])
        vec = tuple(gr(x) for x in other)
        if len(vec) != self.cols:
            raise DimensionError("matrix-vector length mismatch")
        return tuple(_dot(r, vec) for r in self._entries)

    def scale(self, c) -> "CMatrix":
        c = gr(c)
        return CMatrix([[c * x for x in row] for row in self._entries])

    def transpose(self) -> "CMatrix":
        return CMatrix([self.column(j) for j in range(self.cols)])

    def det(self) -> GaussianRational:
        return det(self)

    def inverse(self) -> "CMatrix":
        return inverse(self)


def _dot(u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> GaussianRational:
    total = ZERO
    for a, b in zip(u, v):
        total = total + a * b
    return total


def det(m: CMatrix) -> GaussianRational:
    if not m.is_square():
        raise DimensionError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    return gr(determinant(m.entries))


def inverse(m: CMatrix) -> CMatrix:
    """Exact inverse by Gauss-Jordan elimination; raises :class:`SingularMatrixError`."""
    if not m.is_square():
        raise DimensionError(f"inverse of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    a = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m.entries)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular (det = 0)", det=ZERO)
        a[col], a[piv] = a[piv], a[col]
        p_inv = a[col][col].inverse()
        a[col] = [x * p_inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return CMatrix([row[n:] for row in a])


def real_determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    return Fraction(determinant(rows))


def bilinear(u: Sequence[GaussianRational], v: Sequence[GaussianRational]) -> GaussianRational:
    """``sum_j u_j v_j`` with no conjugation."""
    if len(u) != len(v):
        raise DimensionError("pairing of vectors of different lengths")
    return _dot([gr(x) for x in u], [gr(x) for x in v])
