"""Quaternions and octonions over the rationals.

Octonions are pairs ``(a, alpha)`` of quaternions with the Cayley-Dickson
product ``(a, alpha)(b, beta) = (ab - conj(beta) alpha, beta a + alpha conj(b))``.
Coordinates are stored flat, ``(a.1, a.i, a.j, a.k, alpha.1, alpha.i, alpha.j, alpha.k)``;
the product is evaluated through a structure-constant table that is itself
generated from :func:`cayley_dickson` on basis pairs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "Quaternion",
    "Octonion",
    "cayley_dickson",
    "oct_mul",
    "omega3",
    "multiplication_table",
    "ONE",
]


class Quaternion:
    """Hamilton quaternion ``w + x i + y j + z k``."""

    __slots__ = ("c",)

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        if len(coords) != 4:
            raise ValueError("a quaternion has 4 coordinates")
        self.c = tuple(coords)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion(x * other for x in self.c)
        a1, b1, c1, d1 = self.c
        a2, b2, c2, d2 = other.c
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    __rmul__ = lambda self, k: Quaternion(k * x for x in self.c)  # noqa: E731

    def __add__(self, other):
        return Quaternion(a + b for a, b in zip(self.c, other.c))

    def __sub__(self, other):
        return Quaternion(a - b for a, b in zip(self.c, other.c))

    def __neg__(self):
        return Quaternion(-a for a in self.c)

    def conj(self) -> "Quaternion":
        w, x, y, z = self.c
        return Quaternion(w, -x, -y, -z)

    def norm2(self):
        return sum(x * x for x in self.c)

    def __eq__(self, other):
        return isinstance(other, Quaternion) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Quaternion{self.c}"


def cayley_dickson(p: tuple[Quaternion, Quaternion],
                   q: tuple[Quaternion, Quaternion]) -> tuple[Quaternion, Quaternion]:
    """The doubling product on pairs of quaternions, written out literally."""
    a, alpha = p
    b, beta = q
    return (a * b - beta.conj() * alpha, beta * a + alpha * b.conj())


def _build_table() -> tuple[tuple[tuple[int, int], ...], ...]:
    def unit(k):
        c = [0] * 8
        c[k] = 1
        return Quaternion(c[:4]), Quaternion(c[4:])

    table = []
    for i in range(8):
        row = []
        for j in range(8):
            x, y = cayley_dickson(unit(i), unit(j))
            flat = x.c + y.c
            nz = [(k, v) for k, v in enumerate(flat) if v]
            if len(nz) != 1 or abs(nz[0][1]) != 1:
                raise AssertionError(f"basis product e{i}e{j} is not a signed unit: {flat}")
            k, s = nz[0]
            row.append((s, k))
        table.append(tuple(row))
    return tuple(table)


_TABLE = _build_table()


def multiplication_table() -> list[list[tuple[int, int]]]:
    """``table[i][j] = (sign, k)`` with ``e_i e_j = sign * e_k``."""
    return [list(r) for r in _TABLE]


class Octonion:
    __slots__ = ("c",)

    def __init__(self, coords: Sequence = (0,) * 8):
        coords = tuple(coords)
        if len(coords) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.c = coords

    @classmethod
    def from_pair(cls, a: Quaternion, alpha: Quaternion) -> "Octonion":
        return cls(a.c + alpha.c)

    @classmethod
    def unit(cls, k: int) -> "Octonion":
        c = [0] * 8
        c[k] = 1
        return cls(c)

    @property
    def a(self) -> Quaternion:
        return Quaternion(self.c[:4])

    @property
    def alpha(self) -> Quaternion:
        return Quaternion(self.c[4:])

    def pair(self) -> tuple[Quaternion, Quaternion]:
        return self.a, self.alpha

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return Octonion([x * other for x in self.c])
        out = [0] * 8
        oc = other.c
        for i, x in enumerate(self.c):
            if x:
                row = _TABLE[i]
                for j, y in enumerate(oc):
                    if y:
                        s, k = row[j]
                        out[k] += s * x * y
        return Octonion(out)

    def __rmul__(self, k):
        return Octonion([k * x for x in self.c])

    def __add__(self, other):
        return Octonion([a + b for a, b in zip(self.c, other.c)])

    def __sub__(self, other):
        return Octonion([a - b for a, b in zip(self.c, other.c)])

    def __neg__(self):
        return Octonion([-a for a in self.c])

    def conj(self) -> "Octonion":
        c = self.c
        return Octonion((c[0],) + tuple(-x for x in c[1:]))

    def re(self):
        return self.c[0]

    def norm2(self):
        return sum(x * x for x in self.c)

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.c == other.c

    def __hash__(self):
        return hash(tuple(Fraction(x) for x in self.c))

    def __repr__(self):
        return f"Octonion{self.c}"


ONE = Octonion.unit(0)
ZERO = Octonion()


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    return a * b


def g_oct(a: Octonion, b: Octonion):
    """``Re(conj(a) b)``, the euclidean product of the coordinates."""
    return sum(x * y for x, y in zip(a.c, b.c))


def omega3(a: Octonion, b: Octonion, c: Octonion):
    """The cyclic 3-form ``Re(abc)``, evaluated as ``Re((ab)c)``."""
    return ((a * b) * c).re()
