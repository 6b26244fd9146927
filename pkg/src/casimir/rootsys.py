"""Root-system data for the simple Lie algebras and exact Casimir eigenvalues.

Classical families carry explicit epsilon-coordinates for their fundamental
weights, with the invariant product normalised so that the epsilons are
orthonormal (type A: ``b(e_i, e_j) = delta_ij - 1/(n+1)`` on the trace-zero
quotient).  Exceptional families have no epsilon model here: their product
``b(w_i, w_j)`` comes from the Cartan matrix and root lengths, and only
ratios such as :func:`relative_casimir` are meaningful for them.

Exceptional nodes follow Bourbaki numbering:

* E6: chain 1-3-4-5-6, node 2 attached to 4.  w1 = [27], w6 = [27]*, w2 = adjoint.
* E7: chain 1-3-4-5-6-7, node 2 attached to 4.  w7 = [56], w1 = adjoint.
* E8: chain 1-3-4-5-6-7-8, node 2 attached to 4.  w8 = adjoint [248].
* F4: 1-2=>3-4 with a1, a2 long.  w4 = [26], w1 = adjoint [52].
* G2: a1 short, a2 long.  w1 = [7], w2 = adjoint [14].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .ratlin import RatMatrix, as_rational, inverse

FAMILIES = "ABCDEFG"
CLASSICAL = "ABCD"


class InvalidAlgebra(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise InvalidAlgebra(f"unknown family {f!r}; expected one of {', '.join(FAMILIES)}")
        if not isinstance(n, int) or n < 1:
            raise InvalidAlgebra(f"rank must be a positive integer, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise InvalidAlgebra(f"{f}_{n} is not a valid simple Lie algebra "
                                 f"({_RANK_RULES[f]})")

    @property
    def is_classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def eps_dim(self) -> int:
        """Length of epsilon-coordinate vectors (classical families only)."""
        if not self.is_classical:
            raise InvalidAlgebra(f"{self} has no epsilon coordinates")
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


_RANK_RULES = {
    "A": "A requires n >= 1",
    "B": "B requires n >= 2",
    "C": "C requires n >= 2",
    "D": "D requires n >= 3",
    "E": "E requires n in {6, 7, 8}",
    "F": "F requires n = 4",
    "G": "G requires n = 2",
}


def algebra(family: str, rank: int) -> LieAlgebra:
    return LieAlgebra(family.upper(), int(rank))


@dataclass(frozen=True)
class EpsWeight:
    algebra: LieAlgebra
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(as_rational(c) for c in self.coords))
        if len(self.coords) != self.algebra.eps_dim:
            raise ValueError(f"{self.algebra} weights need {self.algebra.eps_dim} coordinates")

    def __add__(self, other: "EpsWeight") -> "EpsWeight":
        return EpsWeight(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "EpsWeight":
        c = as_rational(c)
        return EpsWeight(self.algebra, tuple(c * a for a in self.coords))


@dataclass(frozen=True)
class DominantWeight:
    algebra: LieAlgebra
    lam: tuple

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        if len(lam) != self.algebra.rank:
            raise ValueError(f"{self.algebra} weights need {self.algebra.rank} coordinates")
        if any(x < 0 for x in lam):
            raise ValueError(f"dominant weight has negative coordinate: {lam}")
        object.__setattr__(self, "lam", lam)

    @classmethod
    def fundamental(cls, alg: LieAlgebra, r: int) -> "DominantWeight":
        """The fundamental weight w_r (1-based)."""
        return cls(alg, tuple(int(i == r - 1) for i in range(alg.rank)))

    @classmethod
    def zero(cls, alg: LieAlgebra) -> "DominantWeight":
        return cls(alg, (0,) * alg.rank)

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        return DominantWeight(self.algebra, tuple(a + b for a, b in zip(self.lam, other.lam)))

    def is_zero(self) -> bool:
        return not any(self.lam)

    def support(self) -> list[int]:
        return [i + 1 for i, x in enumerate(self.lam) if x]

    def pretty(self) -> str:
        """``2ω_1``, ``ω_2+ω_3``, ``0``."""
        if self.is_zero():
            return "0"
        parts = []
        for i, x in enumerate(self.lam):
            if x:
                parts.append(f"{'' if x == 1 else x}ω_{i + 1}")
        return "+".join(parts)


@dataclass(frozen=True)
class GramData:
    algebra: LieAlgebra
    gram: RatMatrix

    def scaled(self, c) -> "GramData":
        return GramData(self.algebra, self.gram.scale(c))


# -- inner products -----------------------------------------------------------

def inner_product(alg: LieAlgebra, x: EpsWeight, y: EpsWeight) -> Fraction:
    if not alg.is_classical:
        raise InvalidAlgebra(f"{alg} has no epsilon model; use gram_data()")
    dot = sum((a * b for a, b in zip(x.coords, y.coords)), Fraction(0))
    if alg.family == "A":
        return dot - sum(x.coords) * sum(y.coords) / (alg.rank + 1)
    return dot


# -- fundamental weights --------------------------------------------------------

def _eps(alg: LieAlgebra, coeffs: Sequence) -> EpsWeight:
    coeffs = list(coeffs) + [0] * (alg.eps_dim - len(coeffs))
    return EpsWeight(alg, tuple(coeffs))


def _classical_fundamentals(alg: LieAlgebra) -> list[EpsWeight]:
    n = alg.rank
    half = Fraction(1, 2)
    out = []
    for r in range(1, n + 1):
        if alg.family == "B" and r == n:
            out.append(_eps(alg, [half] * n))
        elif alg.family == "D" and r == n - 1:
            out.append(_eps(alg, [half] * (n - 1) + [-half]))
        elif alg.family == "D" and r == n:
            out.append(_eps(alg, [half] * n))
        else:
            out.append(_eps(alg, [1] * r))
    return out


def fundamental_weights(alg: LieAlgebra):
    """Epsilon-coordinates of w_1..w_n (classical) or the Gram data (exceptional)."""
    if alg.is_classical:
        return _classical_fundamentals(alg)
    return gram_data(alg)


def rho(alg: LieAlgebra):
    """Half sum of positive roots: epsilon-coordinates (classical) or (1,...,1)."""
    if alg.is_classical:
        total = _eps(alg, [])
        for w in _classical_fundamentals(alg):
            total = total + w
        return total
    return (1,) * alg.rank


# Bourbaki Cartan matrices a_ij = <a_i, a_j^vee> and squared root lengths.
def _cartan_exceptional(alg: LieAlgebra) -> tuple[list[list[int]], list[int]]:
    if alg.family == "E":
        n = alg.rank
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        c = [[2 * (i == j) for j in range(n)] for i in range(n)]
        for i, j in edges:
            c[i - 1][j - 1] = c[j - 1][i - 1] = -1
        return c, [2] * n
    if alg.family == "F":
        c = [[2, -1, 0, 0],
             [-1, 2, -2, 0],
             [0, -1, 2, -1],
             [0, 0, -1, 2]]
        return c, [2, 2, 1, 1]
    if alg.family == "G":
        c = [[2, -1],
             [-3, 2]]
        return c, [1, 3]
    raise InvalidAlgebra(f"no exceptional Cartan data for {alg}")


def cartan_matrix(alg: LieAlgebra) -> RatMatrix:
    """Cartan matrix ``a_ij = 2 (a_i, a_j) / (a_j, a_j)`` for every family."""
    if alg.is_classical:
        roots = simple_roots(alg)
        return RatMatrix.from_rows([
            [2 * inner_product(alg, a, b) / inner_product(alg, b, b) for b in roots]
            for a in roots])
    return RatMatrix.from_rows(_cartan_exceptional(alg)[0])


def simple_roots(alg: LieAlgebra) -> list[EpsWeight]:
    n = alg.rank
    roots = []
    for k in range(n - 1):
        e = [0] * alg.eps_dim
        e[k], e[k + 1] = 1, -1
        roots.append(EpsWeight(alg, tuple(e)))
    last = [0] * alg.eps_dim
    if alg.family == "A":
        last[n - 1], last[n] = 1, -1
    elif alg.family == "B":
        last[n - 1] = 1
    elif alg.family == "C":
        last[n - 1] = 2
    elif alg.family == "D":
        last[n - 2], last[n - 1] = 1, 1
    else:
        raise InvalidAlgebra(f"{alg} has no epsilon model")
    roots.append(EpsWeight(alg, tuple(last)))
    return roots


def gram_from_cartan(cartan: RatMatrix, root_lengths: Sequence) -> RatMatrix:
    """``b(w_i, w_j)`` from a Cartan matrix and squared simple-root lengths.

    With ``B = ((a_i, a_j))`` and ``D = diag(|a_j|^2 / 2)``, the fundamental
    weights are ``w = D B^{-1} a`` so their Gram matrix is ``D B^{-1} D``.
    """
    n = cartan.rows
    d = [as_rational(x) / 2 for x in root_lengths]
    # (a_i, a_j) = a_ij |a_j|^2 / 2
    b = RatMatrix(n, n, [cartan[i, j] * d[j] for i in range(n) for j in range(n)])
    binv = inverse(b)
    return RatMatrix(n, n, [d[i] * binv[i, j] * d[j] for i in range(n) for j in range(n)])


@lru_cache(maxsize=None)
def gram_data(alg: LieAlgebra) -> GramData:
    """Gram matrix of the fundamental weights."""
    if alg.is_classical:
        ws = _classical_fundamentals(alg)
        return GramData(alg, RatMatrix.from_rows(
            [[inner_product(alg, a, b) for b in ws] for a in ws]))
    cartan, lengths = _cartan_exceptional(alg)
    return GramData(alg, gram_from_cartan(RatMatrix.from_rows(cartan), lengths))


# -- Casimir eigenvalues ---------------------------------------------------------

def casimir_from_gram(gram: RatMatrix, lam: Sequence[int]) -> Fraction:
    """``b(l, l + 2 rho)`` with ``rho = (1, ..., 1)`` in the fundamental basis."""
    n = gram.rows
    shifted = [x + 2 for x in lam]
    total = Fraction(0)
    for i in range(n):
        if lam[i]:
            total += lam[i] * sum((gram[i, j] * shifted[j] for j in range(n)), Fraction(0))
    return total


def casimir(alg: LieAlgebra, w: DominantWeight, gram: Optional[GramData] = None) -> Fraction:
    g = (gram or gram_data(alg)).gram
    return casimir_from_gram(g, w.lam)


_ADJOINT_EXCEPTIONAL = {("E", 6): 2, ("E", 7): 1, ("E", 8): 8, ("F", 4): 1, ("G", 2): 2}


def adjoint_weight(alg: LieAlgebra) -> DominantWeight:
    n, f = alg.rank, alg.family
    lam = [0] * n
    if f == "A":
        if n == 1:
            lam[0] = 2
        else:
            lam[0] = lam[n - 1] = 1
    elif f == "B":
        if n == 2:
            lam[1] = 2
        else:
            lam[1] = 1
    elif f == "C":
        lam[0] = 2
    elif f == "D":
        if n == 3:
            lam[1] = lam[2] = 1
        else:
            lam[1] = 1
    else:
        lam[_ADJOINT_EXCEPTIONAL[(f, n)] - 1] = 1
    return DominantWeight(alg, tuple(lam))


def adjoint_casimir(alg: LieAlgebra, gram: Optional[GramData] = None) -> Fraction:
    return casimir(alg, adjoint_weight(alg), gram)


def relative_casimir(alg: LieAlgebra, w: DominantWeight,
                     gram: Optional[GramData] = None) -> Fraction:
    """``Cas_l / Cas_adjoint``; independent of the normalisation of ``b``."""
    return casimir(alg, w, gram) / adjoint_casimir(alg, gram)
