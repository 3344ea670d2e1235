"""Exact linear algebra over the rationals.

Everything downstream (Hom spaces, cone minimization, idempotent analysis)
reduces to Gaussian elimination on :class:`fractions.Fraction` matrices.
There are no tolerances anywhere: rank is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Scalar = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(x: Union[int, str, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Immutable rational matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        rows = tuple(tuple(to_scalar(x) for x in row) for row in entries)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> Matrix:
        return cls([[col[i] for col in columns] for i in range(rows)], len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> Matrix:
        return Matrix([self.column(j) for j in range(self.cols)], self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
            self.cols,
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in r] for r in self.entries], self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = to_scalar(c)
        return Matrix([[c * a for a in r] for r in self.entries], self.cols)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(matmul(self.entries, other.entries, other.cols), other.cols)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(
            sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in self.entries
        )

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.entries)

    def rank(self) -> int:
        return rank(self)


MatrixLike = Union[Matrix, Sequence[Sequence]]


def _rows(m: MatrixLike) -> tuple[list[list[Fraction]], int]:
    if isinstance(m, Matrix):
        return [list(r) for r in m.entries], m.cols
    rows = [[to_scalar(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], bcols: int) -> list[list[Fraction]]:
    out = []
    for row in a:
        acc = [ZERO] * bcols
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(bcols):
                    y = brow[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def rref(m: MatrixLike, ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    rows, cols = _rows(m)
    if ncols is not None:
        cols = ncols
    rows = [r for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = ONE / prow[c]
        if inv != ONE:
            prow = [x * inv for x in prow]
            rows[r] = prow
        nz = [j for j in range(c, cols) if prow[j]]
        for i in range(len(rows)):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    for j in nz:
                        row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(m: MatrixLike) -> int:
    return len(rref(m)[1])


def kernel_basis(m: MatrixLike, ncols: int | None = None) -> list[Vector]:
    """Basis of the right null space ``{x : m x = 0}``."""
    rows, cols = _rows(m)
    if ncols is not None:
        cols = ncols
    reduced, pivots = rref(rows, cols)
    pivset = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivset:
            continue
        v = [ZERO] * cols
        v[free] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def solve(m: MatrixLike, b: Sequence) -> Vector | None:
    """Some ``x`` with ``m x = b``, or ``None`` when inconsistent."""
    rows, cols = _rows(m)
    if len(b) != len(rows):
        raise ValueError("right-hand side length must equal the row count")
    aug = [r + [to_scalar(x)] for r, x in zip(rows, b)]
    reduced, pivots = rref(aug, cols + 1)
    if pivots and pivots[-1] == cols:
        return None
    x = [ZERO] * cols
    for row, p in zip(reduced, pivots):
        x[p] = row[cols]
    return tuple(x)


def column_space_basis(vectors: Sequence[Sequence], dim: int) -> list[Vector]:
    """A maximal independent subfamily of ``vectors`` (kept in order)."""
    chosen: list[Vector] = []
    echelon: list[tuple[int, list[Fraction]]] = []
    for v in vectors:
        w = _reduce_against(echelon, [to_scalar(x) for x in v])
        if w is not None:
            chosen.append(tuple(to_scalar(x) for x in v))
            _insert_echelon(echelon, w)
    return chosen


def _reduce_against(echelon, w):
    for p, row in echelon:
        f = w[p]
        if f:
            for j, x in enumerate(row):
                if x:
                    w[j] -= f * x
    return w if any(w) else None


def _insert_echelon(echelon, w):
    p = next(j for j, x in enumerate(w) if x)
    inv = ONE / w[p]
    w = [x * inv for x in w]
    for _, row in echelon:
        f = row[p]
        if f:
            for j, x in enumerate(w):
                if x:
                    row[j] -= f * x
    echelon.append((p, w))


def extend_to_complement(sub: Sequence[Sequence], candidates: Sequence[Sequence]) -> list[Vector]:
    """Vectors from ``candidates`` completing ``span(sub)`` to ``span(sub + candidates)``."""
    echelon: list = []
    for v in sub:
        w = _reduce_against(echelon, [to_scalar(x) for x in v])
        if w is not None:
            _insert_echelon(echelon, w)
    out = []
    for v in candidates:
        w = _reduce_against(echelon, [to_scalar(x) for x in v])
        if w is not None:
            out.append(tuple(to_scalar(x) for x in v))
            _insert_echelon(echelon, w)
    return out


class Coordinates:
    """Solve ``x`` in ``sum x_k v_k = z`` for a fixed independent family ``v_k``.

    Precomputes an invertible square block so each query is a matrix-vector
    product plus an exact membership check.
    """

    def __init__(self, vectors: Sequence[Sequence], dim: int):
        self.vectors = [tuple(to_scalar(x) for x in v) for v in vectors]
        self.dim = dim
        k = len(self.vectors)
        if k == 0:
            self._rows: list[int] = []
            self._inv: list[list[Fraction]] = []
            return
        # row-reduce the transpose to find k rows where the family is invertible
        cols = [list(v) for v in self.vectors]
        _, pivots = rref(cols, dim)
        if len(pivots) != k:
            raise ValueError("vectors are linearly dependent")
        self._rows = pivots
        square = [[self.vectors[j][r] for j in range(k)] for r in pivots]
        self._inv = inverse(square)

    def __call__(self, z: Sequence, check: bool = True) -> Vector | None:
        k = len(self.vectors)
        zs = [to_scalar(z[r]) for r in self._rows]
        x = tuple(
            sum((a * b for a, b in zip(row, zs) if a and b), ZERO) for row in self._inv
        )
        if check:
            recon = [ZERO] * self.dim
            for c, v in zip(x, self.vectors):
                if c:
                    for i, y in enumerate(v):
                        if y:
                            recon[i] += c * y
            if any(to_scalar(a) != b for a, b in zip(z, recon)):
                return None
        return x if k else ()


def inverse(m: MatrixLike) -> list[list[Fraction]]:
    rows, cols = _rows(m)
    n = len(rows)
    if n != cols:
        raise ValueError("inverse of a non-square matrix")
    aug = [r + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(rows)]
    reduced, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]


# --------------------------------------------------------------------------
# Two-dimensional algebras


@dataclass(frozen=True)
class Nilpotent:
    """``{1, epsilon}`` with ``epsilon**2 == 0``; ``epsilon`` in input coordinates."""

    epsilon: Vector


@dataclass(frozen=True)
class Disconnected:
    """Orthogonal idempotents with ``p1 + p2 == 1``."""

    p1: Vector
    p2: Vector


@dataclass(frozen=True)
class IrreducibleQuadratic:
    """``b`` satisfies ``x**2 - beta*x - alpha`` with no rational root."""

    alpha: Fraction
    beta: Fraction

    @property
    def minimal_polynomial(self) -> str:
        return f"x^2 - ({self.beta})*x - ({self.alpha})"


def _multiply(table, x: Sequence, y: Sequence) -> Vector:
    n = len(x)
    out = [ZERO] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            c = x[i] * y[j]
            for k in range(n):
                out[k] += c * to_scalar(table[i][j][k])
    return tuple(out)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def split_two_dimensional_algebra(unit: Sequence, basis_b: Sequence, mult_table):
    """Classify a two-dimensional unital commutative algebra over Q.

    ``mult_table[i][j]`` is the coordinate vector of ``e_i * e_j`` for an
    arbitrary basis ``(e_0, e_1)``; ``unit`` and ``basis_b`` are coordinate
    vectors. Writing ``b**2 = alpha + beta*b``, returns :class:`Nilpotent`,
    :class:`Disconnected` or :class:`IrreducibleQuadratic` according to the
    roots of ``x**2 - beta*x - alpha``.
    """
    if len(mult_table) != 2 or any(len(r) != 2 for r in mult_table):
        raise ValueError("algebra must be two-dimensional")
    if len(unit) != 2 or len(basis_b) != 2:
        raise ValueError("algebra must be two-dimensional")
    unit = tuple(to_scalar(x) for x in unit)
    b = tuple(to_scalar(x) for x in basis_b)
    for e in ((ONE, ZERO), (ZERO, ONE)):
        if _multiply(mult_table, unit, e) != e or _multiply(mult_table, e, unit) != e:
            raise ValueError("given unit is not a two-sided unit")
    coords = Coordinates([unit, b], 2)
    if len(coords.vectors) != 2:
        raise ValueError("unit and b do not form a basis")
    alpha, beta = coords(_multiply(mult_table, b, b))

    def combo(c1, cb):
        return tuple(c1 * u + cb * x for u, x in zip(unit, b))

    disc = beta * beta + 4 * alpha
    if disc == 0:
        return Nilpotent(combo(-beta / 2, ONE))
    root = _rational_sqrt(disc)
    if root is None:
        return IrreducibleQuadratic(alpha, beta)
    r1, r2 = (beta + root) / 2, (beta - root) / 2
    # p1 = (b - r2)/(r1 - r2), p2 = (b - r1)/(r2 - r1)
    p1 = combo(-r2 / (r1 - r2), ONE / (r1 - r2))
    p2 = combo(-r1 / (r2 - r1), ONE / (r2 - r1))
    return Disconnected(p1, p2)
