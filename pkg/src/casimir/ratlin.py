"""Exact rational scalars and small dense matrices.

Scalars are :class:`fractions.Fraction` (plain ``int`` is accepted wherever a
rational is expected).  Matrices are immutable and stored row-major.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "RatMatrix",
    "as_rational",
    "rank",
    "kernel_basis",
    "inverse",
    "dual_basis",
    "sym_product",
    "fmt",
]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def fmt(x) -> str:
    """Render an exact rational as ``p/q`` (or ``p`` when integral)."""
    x = as_rational(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Dense immutable matrix over the rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(as_rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "RatMatrix":
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, [])

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def T(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt(e) for e in self.row(i)) for i in range(self.rows))
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RatMatrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> "RatMatrix":
        c = as_rational(c)
        return RatMatrix(self.rows, self.cols, [c * a for a in self.entries])

    def __rmul__(self, c) -> "RatMatrix":
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = [other.col(j) for j in range(other.cols)]
            out = []
            for i in range(self.rows):
                r = self.row(i)
                out.extend(sum(a * b for a, b in zip(r, c) if a and b) for c in ocols)
            return RatMatrix(self.rows, other.cols, out)
        v = [as_rational(x) for x in other]
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((a * b for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                for i in range(self.rows)]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    # row scaling by the lcm of denominators keeps the row space
    out = []
    for i in range(m.rows):
        r = m.row(i)
        d = lcm(*(e.denominator for e in r)) if r else 1
        out.append([int(e * d) for e in r])
    return out


def _bareiss_echelon(a: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination; returns echelon rows and pivot columns."""
    a = [row[:] for row in a]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            lead = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c, ncols):
                # exact by Sylvester's identity
                row_i[j] = (piv * row_i[j] - lead * row_r[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals."""
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _bareiss_echelon(_integer_rows(m))
    return len(pivots)


def kernel_basis(m: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right null space ``{v : m v = 0}``.

    One vector per free column; the free coordinate is set to 1.
    """
    if m.cols == 0:
        return []
    if m.rows == 0:
        return [[Fraction(int(i == j)) for i in range(m.cols)] for j in range(m.cols)]
    echelon, pivots = _bareiss_echelon(_integer_rows(m))
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            row = echelon[k]
            s = sum((row[j] * v[j] for j in range(c + 1, m.cols) if row[j] and v[j]), Fraction(0))
            v[c] = -s / row[c]
        basis.append(v)
    return basis


def inverse(m: RatMatrix) -> RatMatrix:
    """Inverse of a square nonsingular matrix by Gauss-Jordan elimination."""
    n = m.rows
    if n != m.cols:
        raise ValueError("inverse of non-square matrix")
    a = [list(m.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return RatMatrix(n, n, [x for row in a for x in row[n:]])


def dual_basis(gram: RatMatrix) -> RatMatrix:
    """Coefficients of the metric duals of a basis.

    For a basis ``b_1..b_n`` with (possibly non-symmetric) Gram matrix
    ``gram[i, j] = g(b_i, b_j)``, row ``mu`` of the result holds the
    coordinates of ``db_mu^#``, the vector with ``g(db_mu^#, b_nu) = delta``.
    """
    return inverse(gram)


def sym_product(phi: Sequence, psi: Sequence) -> RatMatrix:
    """Symmetric product ``phi . psi = phi (x) psi + psi (x) phi`` of two covectors."""
    phi = [as_rational(x) for x in phi]
    psi = [as_rational(x) for x in psi]
    n = len(phi)
    return RatMatrix(n, n, [phi[i] * psi[j] + psi[i] * phi[j] for i in range(n) for j in range(n)])
