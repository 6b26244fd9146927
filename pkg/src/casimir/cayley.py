"""Albert algebra arithmetic and the divergence operator of the Cayley plane.

The 27-dimensional Albert algebra is stored in split form
``a 1 + abar Gamma + A + alpha`` with ``Gamma = diag(2, -1, -1)``, a vector
``A = A0 (+) A1`` in ``V = R (+) O`` and a spinor ``alpha = alpha2 (+) alpha3`` in
``Sigma = O (+) O``.  In hermitian-matrix form this is::

    [ a + 2 abar        conj(alpha3)          alpha2          ]
    [ alpha3            a - abar + A0         conj(A1)        ]
    [ conj(alpha2)      A1                    a - abar - A0   ]

Flat coordinates: Albert elements use ``(a, abar, A0, A1[0:8], alpha2[0:8], alpha3[0:8])``;
trace-free elements (``ImAlbert``) drop ``a``.  Spinor coordinates are
``alpha2[0:8] + alpha3[0:8]``.

Sign convention of the divergence: the operator is assembled as
``r -> -sum_l (dxi_l^# -| F(-theta_{xi_l} r))^#`` and comes out as ``+9`` times
the projection onto ``Sigma``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .octonion import ONE, ZERO, Octonion, g_oct
from .ratlin import RatMatrix, dual_basis

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class VVector:
    A0: object
    A1: Octonion

    @classmethod
    def zero(cls) -> "VVector":
        return cls(0, ZERO)

    @classmethod
    def from_coords(cls, c: Sequence) -> "VVector":
        return cls(c[0], Octonion(c[1:9]))

    def coords(self) -> tuple:
        return (self.A0,) + self.A1.c

    def __add__(self, o):
        return VVector(self.A0 + o.A0, self.A1 + o.A1)

    def __sub__(self, o):
        return VVector(self.A0 - o.A0, self.A1 - o.A1)

    def __neg__(self):
        return VVector(-self.A0, -self.A1)

    def scale(self, k) -> "VVector":
        return VVector(k * self.A0, k * self.A1)

    def is_zero(self) -> bool:
        return not self.A0 and self.A1.is_zero()


@dataclass(frozen=True, slots=True)
class Spinor:
    alpha2: Octonion
    alpha3: Octonion

    @classmethod
    def zero(cls) -> "Spinor":
        return cls(ZERO, ZERO)

    @classmethod
    def from_coords(cls, c: Sequence) -> "Spinor":
        return cls(Octonion(c[:8]), Octonion(c[8:16]))

    def coords(self) -> tuple:
        return self.alpha2.c + self.alpha3.c

    def __add__(self, o):
        return Spinor(self.alpha2 + o.alpha2, self.alpha3 + o.alpha3)

    def __sub__(self, o):
        return Spinor(self.alpha2 - o.alpha2, self.alpha3 - o.alpha3)

    def __neg__(self):
        return Spinor(-self.alpha2, -self.alpha3)

    def scale(self, k) -> "Spinor":
        return Spinor(k * self.alpha2, k * self.alpha3)

    def is_zero(self) -> bool:
        return self.alpha2.is_zero() and self.alpha3.is_zero()


def g_V(A: VVector, B: VVector):
    return A.A0 * B.A0 + g_oct(A.A1, B.A1)


def g_Sigma(s: Spinor, t: Spinor):
    return g_oct(s.alpha2, t.alpha2) + g_oct(s.alpha3, t.alpha3)


@dataclass(frozen=True, slots=True)
class AlbertElement:
    a: object
    abar: object
    v: VVector
    sigma: Spinor

    @classmethod
    def zero(cls) -> "AlbertElement":
        return cls(0, 0, VVector.zero(), Spinor.zero())

    @classmethod
    def from_coords(cls, c: Sequence) -> "AlbertElement":
        return cls(c[0], c[1], VVector.from_coords(c[2:11]), Spinor.from_coords(c[11:27]))

    def coords(self) -> tuple:
        return (self.a, self.abar) + self.v.coords() + self.sigma.coords()

    def __add__(self, o):
        return AlbertElement(self.a + o.a, self.abar + o.abar, self.v + o.v, self.sigma + o.sigma)

    def __sub__(self, o):
        return AlbertElement(self.a - o.a, self.abar - o.abar, self.v - o.v, self.sigma - o.sigma)

    def scale(self, k) -> "AlbertElement":
        return AlbertElement(k * self.a, k * self.abar, self.v.scale(k), self.sigma.scale(k))

    def __eq__(self, o):
        return isinstance(o, AlbertElement) and self.coords() == o.coords()

    def __hash__(self):
        return hash(tuple(Fraction(x) for x in self.coords()))

    def trace_free(self) -> "ImAlbert":
        if self.a:
            raise ValueError("element has a nonzero unit component")
        return ImAlbert(self.abar, self.v, self.sigma)


UNIT = AlbertElement(1, 0, VVector.zero(), Spinor.zero())
GAMMA = AlbertElement(0, 1, VVector.zero(), Spinor.zero())


@dataclass(frozen=True, slots=True)
class ImAlbert:
    """Trace-free Albert element ``abar Gamma + A + alpha`` (26 coordinates)."""

    abar: object
    v: VVector
    sigma: Spinor

    @classmethod
    def from_coords(cls, c: Sequence) -> "ImAlbert":
        return cls(c[0], VVector.from_coords(c[1:10]), Spinor.from_coords(c[10:26]))

    def coords(self) -> tuple:
        return (self.abar,) + self.v.coords() + self.sigma.coords()

    def as_albert(self) -> AlbertElement:
        return AlbertElement(0, self.abar, self.v, self.sigma)


# -- bases ---------------------------------------------------------------------------

def _units(n: int) -> list[list[int]]:
    return [[int(i == k) for i in range(n)] for k in range(n)]


def spinor_basis() -> list[Spinor]:
    """``(e_i, 0)`` then ``(0, e_i)``; orthonormal for ``g_Sigma``."""
    return [Spinor.from_coords(u) for u in _units(16)]


def vector_basis() -> list[VVector]:
    return [VVector.from_coords(u) for u in _units(9)]


def albert_basis() -> list[AlbertElement]:
    return [AlbertElement.from_coords(u) for u in _units(27)]


def imalbert_basis() -> list[ImAlbert]:
    return [ImAlbert.from_coords(u) for u in _units(26)]


# -- matrix model ----------------------------------------------------------------------

Matrix3 = list  # 3x3 nested list of Octonion


def to_matrix(x: AlbertElement) -> Matrix3:
    d1 = x.a + 2 * x.abar
    d2 = x.a - x.abar + x.v.A0
    d3 = x.a - x.abar - x.v.A0
    A1, a2, a3 = x.v.A1, x.sigma.alpha2, x.sigma.alpha3
    return [
        [d1 * ONE, a3.conj(), a2],
        [a3, d2 * ONE, A1.conj()],
        [a2.conj(), A1, d3 * ONE],
    ]


def from_matrix(m: Matrix3) -> AlbertElement:
    for i in range(3):
        if any(m[i][i].c[1:]):
            raise ValueError("diagonal entries of a hermitian matrix must be real")
        for j in range(i):
            if m[i][j] != m[j][i].conj():
                raise ValueError("matrix is not hermitian")
    a1, a2, a3 = (m[i][i].re() for i in range(3))
    a = Fraction(a1 + a2 + a3, 3)
    abar = Fraction(2 * a1 - a2 - a3, 6)
    A0 = Fraction(a2 - a3, 2)
    return AlbertElement(a, abar, VVector(A0, m[2][1]), Spinor(m[0][2], m[1][0]))


def matmul3(x: Matrix3, y: Matrix3) -> Matrix3:
    out = []
    for i in range(3):
        row = []
        for k in range(3):
            acc = x[i][0] * y[0][k]
            acc = acc + x[i][1] * y[1][k]
            acc = acc + x[i][2] * y[2][k]
            row.append(acc)
        out.append(row)
    return out


def albert_mul_matrix(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    """Symmetrised product ``(XY + YX) / 2`` of the hermitian matrices."""
    X, Y = to_matrix(x), to_matrix(y)
    xy, yx = matmul3(X, Y), matmul3(Y, X)
    return from_matrix([[HALF * (xy[i][j] + yx[i][j]) for j in range(3)] for i in range(3)])


# -- spin geometry of V ------------------------------------------------------------------

def clifford(A: VVector, s: Spinor) -> Spinor:
    """Clifford multiplication ``A . alpha`` of V on Sigma."""
    A1b = A.A1.conj()
    a2, a3 = s.alpha2, s.alpha3
    return Spinor(
        -A.A0 * a2 + a3.conj() * A1b,
        A.A0 * a3 + A1b * a2.conj(),
    )


def diamond(s: Spinor, t: Spinor) -> VVector:
    """Symmetric spinor product ``Sigma x Sigma -> V``."""
    return VVector(
        g_oct(s.alpha3, t.alpha3) - g_oct(s.alpha2, t.alpha2),
        s.alpha2.conj() * t.alpha3.conj() + t.alpha2.conj() * s.alpha3.conj(),
    )


# -- multiplication in split form ----------------------------------------------------------

def albert_square_split(x: AlbertElement) -> AlbertElement:
    a, ab, A, al = x.a, x.abar, x.v, x.sigma
    gA, gs = g_V(A, A), g_Sigma(al, al)
    return AlbertElement(
        a * a + 2 * ab * ab + Fraction(2, 3) * gA + Fraction(2, 3) * gs,
        2 * a * ab + ab * ab - Fraction(1, 3) * gA + Fraction(1, 6) * gs,
        A.scale(2 * a - 2 * ab) + diamond(al, al).scale(HALF),
        al.scale(2 * a + ab) + clifford(A, al),
    )


def albert_mul_split(x: AlbertElement, y: AlbertElement) -> AlbertElement:
    """Product by polarisation of the split-form square."""
    return (albert_square_split(x + y) - albert_square_split(x) - albert_square_split(y)).scale(HALF)


# -- derivations and the divergence ----------------------------------------------------------

def derivation(xi: Spinor, x: AlbertElement) -> AlbertElement:
    """The derivation ``theta_xi`` of the Albert algebra parametrised by a spinor."""
    return AlbertElement(
        0,
        -g_Sigma(xi, x.sigma),
        diamond(xi, x.sigma),
        clifford(x.v, xi).scale(-1) + xi.scale(3 * x.abar),
    )


def derivation_im(xi: Spinor, r: ImAlbert) -> ImAlbert:
    return derivation(xi, r.as_albert()).trace_free()


def f_tensor(r: ImAlbert) -> RatMatrix:
    """The symmetric form ``(beta, gamma) -> g_V(A, beta <> gamma)`` on Sigma.

    Equals ``1/2 sum g_V(A, xi_mu <> xi_nu) dxi_mu . dxi_nu`` with
    ``phi . psi = phi (x) psi + psi (x) phi``.  Only the V-part of ``r`` enters.
    """
    basis = spinor_basis()
    if r.v.is_zero():
        return RatMatrix.zeros(16, 16)
    return RatMatrix(16, 16, [g_V(r.v, diamond(s, t)) for s in basis for t in basis])


def _sharp_duals(basis: Sequence[Spinor]) -> list[Spinor]:
    gram = RatMatrix.from_rows([[g_Sigma(s, t) for t in basis] for s in basis])
    coeffs = dual_basis(gram)
    out = []
    for mu in range(len(basis)):
        acc = Spinor.zero()
        for k, c in enumerate(coeffs.row(mu)):
            if c:
                acc = acc + basis[k].scale(c)
        out.append(acc)
    return out


def divergence_image(r: ImAlbert, basis: Sequence[Spinor] | None = None) -> Spinor:
    """Prototypical divergence of ``F = f_tensor`` evaluated at ``r``."""
    basis = list(basis or spinor_basis())
    duals = _sharp_duals(basis)
    out = [Fraction(0)] * len(basis)
    for xi, dsharp in zip(basis, duals):
        moved = derivation_im(xi, r)
        neg = ImAlbert(-moved.abar, -moved.v, -moved.sigma)
        form = f_tensor(neg)
        if form.is_zero():
            continue
        x = dsharp.coords()
        cov = [sum((x[mu] * form[mu, k] for mu in range(16) if x[mu]), Fraction(0)) for k in range(16)]
        for nu, b in enumerate(basis):
            out[nu] -= sum((c * y for c, y in zip(cov, b.coords()) if c and y), Fraction(0))
    # components on the chosen basis -> vector via its dual basis
    result = Spinor.zero()
    for nu, c in enumerate(out):
        if c:
            result = result + duals[nu].scale(c)
    return result


def divergence_cayley() -> RatMatrix:
    """16 x 26 matrix of the divergence ``R = Im A -> Sigma``."""
    columns = [divergence_image(r).coords() for r in imalbert_basis()]
    return RatMatrix.from_columns(columns)


def sigma_projection() -> RatMatrix:
    """Coordinate projection ``Im A -> Sigma`` (16 x 26)."""
    return RatMatrix(16, 26, [int(j == i + 10) for i in range(16) for j in range(26)])


def zdia_sum() -> VVector:
    """``sum_mu dxi_mu^# <> xi_mu``."""
    basis = spinor_basis()
    acc = VVector.zero()
    for xi, d in zip(basis, _sharp_duals(basis)):
        acc = acc + diamond(d, xi)
    return acc


def combs(alpha: Spinor) -> Spinor:
    """``2 sum_mu (dxi_mu^# <> alpha) . xi_mu``."""
    basis = spinor_basis()
    acc = Spinor.zero()
    for xi, d in zip(basis, _sharp_duals(basis)):
        acc = acc + clifford(diamond(d, alpha), xi)
    return acc.scale(2)


class NotScalar(ArithmeticError):
    pass


def scalar_factor(result: Spinor, alpha: Spinor) -> Fraction:
    """The ``c`` with ``result == c * alpha``; raises :class:`NotScalar` otherwise."""
    rc, ac = result.coords(), alpha.coords()
    k = next((i for i, x in enumerate(ac) if x), None)
    if k is None:
        if any(rc):
            raise NotScalar("nonzero image of the zero spinor")
        return Fraction(0)
    c = Fraction(rc[k]) / ac[k]
    if any(x != c * y for x, y in zip(rc, ac)):
        raise NotScalar(f"{rc} is not a multiple of {ac}")
    return c


def combs_check(alphas: Sequence[Spinor] | None = None) -> Fraction:
    """Common scalar of ``alpha -> 2 sum (dxi^# <> alpha) . xi`` over the given spinors."""
    alphas = list(alphas or spinor_basis())
    factors = {scalar_factor(combs(al), al) for al in alphas if not al.is_zero()}
    if len(factors) > 1:
        raise NotScalar(f"inconsistent factors {sorted(factors)}")
    return factors.pop() if factors else Fraction(0)


# -- invariant metric on R -------------------------------------------------------------------

def _block_pairings(r: ImAlbert, s: ImAlbert) -> tuple:
    return (r.abar * s.abar, g_V(r.v, s.v), g_Sigma(r.sigma, s.sigma))


def skew_weight_system() -> RatMatrix:
    """Linear conditions on block weights ``(w_Gamma, w_V, w_Sigma)`` making every
    ``theta_xi`` skew on ``R``."""
    rbasis = imalbert_basis()
    rows = []
    for xi in spinor_basis():
        moved = [derivation_im(xi, r) for r in rbasis]
        for i in range(26):
            for j in range(i, 26):
                p = _block_pairings(moved[i], rbasis[j])
                q = _block_pairings(rbasis[i], moved[j])
                row = [p[k] + q[k] for k in range(3)]
                if any(row):
                    rows.append(row)
    return RatMatrix.from_rows(rows)


def skew_weights() -> tuple[Fraction, Fraction, Fraction]:
    """Block weights of the invariant metric on ``R``, normalised to ``w_Sigma = 1``."""
    from .ratlin import kernel_basis

    ker = kernel_basis(skew_weight_system())
    if len(ker) != 1:
        raise ArithmeticError(f"expected a one-parameter family of metrics, got {len(ker)}")
    w = ker[0]
    return tuple(x / w[2] for x in w)


def g_R(r: ImAlbert, s: ImAlbert, weights=(3, 1, 1)):
    return sum(w * p for w, p in zip(weights, _block_pairings(r, s)))


# -- random elements ------------------------------------------------------------------------

def _rand_coords(rng: random.Random, n: int) -> list:
    return [Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3))) for _ in range(n)]


def random_octonion(rng: random.Random) -> Octonion:
    return Octonion(_rand_coords(rng, 8))


def random_spinor(rng: random.Random) -> Spinor:
    return Spinor.from_coords(_rand_coords(rng, 16))


def random_vector(rng: random.Random) -> VVector:
    return VVector.from_coords(_rand_coords(rng, 9))


def random_albert(rng: random.Random) -> AlbertElement:
    return AlbertElement.from_coords(_rand_coords(rng, 27))
