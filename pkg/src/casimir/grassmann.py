"""Symplectic tensor calculus for Sp(r) x Sp(s) inside Sp(r+s).

``H = Q^{2r}`` and ``E = Q^{2s}`` carry the standard symplectic forms
``sigma(u_i, u_{n+i}) = 1``; ``V = H (+) E`` with ``H`` first.  Bivectors on a
space of dimension ``N`` are antisymmetric ``N x N`` matrices, ``x ^ y`` being
``x y^T - y x^T``, and the sigma-contraction of a bivector is
``c(W) = 1/2 sum W_ij sigma_ij`` so that ``c(x ^ y) = sigma(x, y)``.

Vectors and covectors of ``H (x) E`` are flattened row-major: ``(i, j)`` sits at
index ``i * 2s + j``.  Symmetric forms use the product
``phi . psi = phi (x) psi + psi (x) phi``, contraction is in the first slot.

The divergence of a map ``F`` from ``Lambda^2_0 V`` to symmetric forms on
``H (x) E`` is assembled as

    (D*F)(w)^flat = sum_{alpha, mu} (dh_alpha^# (x) de_mu^#) -| F((h_alpha . e_mu) * w)

and compared with the flat of the ``H (x) E`` block of ``w``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Literal, Sequence

from .ratlin import RatMatrix, dual_basis, fmt, kernel_basis, rank

Which = Literal["H", "E"]


# -- symplectic spaces ---------------------------------------------------------------

@dataclass(frozen=True)
class SympSpace:
    half_dim: int

    def __post_init__(self):
        if not isinstance(self.half_dim, int) or self.half_dim < 1:
            raise ValueError(f"half dimension must be a positive integer, got {self.half_dim!r}")

    @property
    def dim(self) -> int:
        return 2 * self.half_dim

    @cached_property
    def omega(self) -> RatMatrix:
        """Matrix of sigma in the standard basis."""
        n = self.half_dim
        J = [[0] * (2 * n) for _ in range(2 * n)]
        for i in range(n):
            J[i][n + i] = 1
            J[n + i][i] = -1
        return RatMatrix.from_rows(J)

    def sigma(self, x: Sequence, y: Sequence) -> Fraction:
        J = self.omega
        return sum((x[i] * J[i, j] * y[j] for i in range(self.dim) if x[i]
                    for j in range(self.dim) if y[j] and J[i, j]), Fraction(0))

    @cached_property
    def sharp_duals(self) -> tuple[tuple[Fraction, ...], ...]:
        """Row ``alpha`` holds ``dh_alpha^#``, defined by ``sigma(dh_alpha^#, h_beta) = delta``."""
        D = dual_basis(self.omega)
        return tuple(D.row(a) for a in range(self.dim))

    def basis(self) -> list[list[int]]:
        return [[int(i == k) for i in range(self.dim)] for k in range(self.dim)]

    def flat(self, v: Sequence) -> list[Fraction]:
        """``v -> sigma(v, .)``."""
        J = self.omega
        return [sum((v[i] * J[i, j] for i in range(self.dim) if v[i]), Fraction(0))
                for j in range(self.dim)]

    def sharp(self, c: Sequence) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for a, ca in enumerate(c):
            if ca:
                for k, x in enumerate(self.sharp_duals[a]):
                    out[k] += ca * x
        return out

    def contraction(self, W: RatMatrix) -> Fraction:
        J = self.omega
        return sum((W.entries[k] * J.entries[k] for k in range(len(W.entries))), Fraction(0)) / 2

    @cached_property
    def symplectic_bivector(self) -> RatMatrix:
        """``sum_alpha dh_alpha^# ^ h_alpha``."""
        acc = RatMatrix.zeros(self.dim, self.dim)
        for a, b in enumerate(self.basis()):
            acc = acc + wedge(self.sharp_duals[a], b)
        return acc


def wedge(x: Sequence, y: Sequence) -> RatMatrix:
    n = len(x)
    return RatMatrix(n, n, [x[i] * y[j] - y[i] * x[j] for i in range(n) for j in range(n)])


def is_antisymmetric(m: RatMatrix) -> bool:
    return m.rows == m.cols and all(m[i, j] == -m[j, i] for i in range(m.rows) for j in range(i + 1))


@dataclass(frozen=True)
class GrassmannConfig:
    r: int
    s: int
    H: SympSpace = field(init=False, repr=False, compare=False)
    E: SympSpace = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("r", "s"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        object.__setattr__(self, "H", SympSpace(self.r))
        object.__setattr__(self, "E", SympSpace(self.s))

    @property
    def dim_V(self) -> int:
        return 2 * self.r + 2 * self.s

    @property
    def dim_HE(self) -> int:
        return 4 * self.r * self.s

    def embed_H(self, h: Sequence) -> list:
        return list(h) + [0] * (2 * self.s)

    def embed_E(self, e: Sequence) -> list:
        return [0] * (2 * self.r) + list(e)

    @cached_property
    def sigma_V(self) -> RatMatrix:
        n, m = 2 * self.r, 2 * self.s
        JH, JE = self.H.omega, self.E.omega
        rows = [[JH[i, j] if i < n and j < n else JE[i - n, j - n] if i >= n and j >= n else 0
                 for j in range(n + m)] for i in range(n + m)]
        return RatMatrix.from_rows(rows)


# -- Lambda^2_0 V --------------------------------------------------------------------------

@dataclass(frozen=True)
class Lambda2oElement:
    """``scalar * theta + bH + t + bE`` with ``theta = omega_H/(2r) - omega_E/(2s)``.

    ``t`` is the ``H (x) E`` block: a ``2r x 2s`` matrix, ``a ^ f`` contributing ``a f^T``.
    """

    scalar: Fraction
    bH: RatMatrix
    t: RatMatrix
    bE: RatMatrix

    def validate(self, cfg: GrassmannConfig) -> "Lambda2oElement":
        n, m = 2 * cfg.r, 2 * cfg.s
        if self.bH.shape != (n, n) or self.bE.shape != (m, m) or self.t.shape != (n, m):
            raise ValueError("component shapes do not match the configuration")
        if not (is_antisymmetric(self.bH) and is_antisymmetric(self.bE)):
            raise ValueError("bH and bE must be antisymmetric")
        if cfg.H.contraction(self.bH) or cfg.E.contraction(self.bE):
            raise ValueError("bH and bE must be sigma-trace free")
        return self

    @classmethod
    def zero(cls, cfg: GrassmannConfig) -> "Lambda2oElement":
        n, m = 2 * cfg.r, 2 * cfg.s
        return cls(Fraction(0), RatMatrix.zeros(n, n), RatMatrix.zeros(n, m), RatMatrix.zeros(m, m))

    def is_zero(self) -> bool:
        return not self.scalar and self.bH.is_zero() and self.t.is_zero() and self.bE.is_zero()

    def __add__(self, o):
        return Lambda2oElement(self.scalar + o.scalar, self.bH + o.bH, self.t + o.t, self.bE + o.bE)

    def scale(self, c) -> "Lambda2oElement":
        return Lambda2oElement(c * self.scalar, self.bH.scale(c), self.t.scale(c), self.bE.scale(c))


def to_bivector(cfg: GrassmannConfig, w: Lambda2oElement) -> RatMatrix:
    n, N = 2 * cfg.r, cfg.dim_V
    wH = w.bH + cfg.H.symplectic_bivector.scale(Fraction(w.scalar) / n)
    wE = w.bE - cfg.E.symplectic_bivector.scale(Fraction(w.scalar) / (N - n))
    out = []
    for i in range(N):
        for j in range(N):
            if i < n and j < n:
                out.append(wH[i, j])
            elif i >= n and j >= n:
                out.append(wE[i - n, j - n])
            elif i < n:
                out.append(w.t[i, j - n])
            else:
                out.append(-w.t[j, i - n])
    return RatMatrix(N, N, out)


def from_bivector(cfg: GrassmannConfig, W: RatMatrix) -> Lambda2oElement:
    """Split a sigma-trace-free bivector of ``V`` into its four components."""
    n, N = 2 * cfg.r, cfg.dim_V
    m = N - n
    if not is_antisymmetric(W):
        raise ValueError("not a bivector")
    WH = RatMatrix(n, n, [W[i, j] for i in range(n) for j in range(n)])
    WE = RatMatrix(m, m, [W[i, j] for i in range(n, N) for j in range(n, N)])
    t = RatMatrix(n, m, [W[i, j] for i in range(n) for j in range(n, N)])
    kH, kE = cfg.H.contraction(WH), cfg.E.contraction(WE)
    if kH + kE:
        raise ValueError("bivector is not sigma-trace free")
    return Lambda2oElement(
        kH,
        WH - cfg.H.symplectic_bivector.scale(kH / n),
        t,
        WE - cfg.E.symplectic_bivector.scale(kE / m),
    )


def trace_free_part(space: SympSpace, W: RatMatrix) -> RatMatrix:
    """Projection of ``Lambda^2`` onto ``Lambda^2_0`` of a single symplectic space."""
    return W - space.symplectic_bivector.scale(space.contraction(W) / space.dim)


def _lambda2o_basis_single(space: SympSpace) -> list[RatMatrix]:
    n, d = space.half_dim, space.dim
    units = space.basis()
    out = []
    for i in range(d):
        for j in range(i + 1, d):
            if j != i + n or i >= n:
                out.append(wedge(units[i], units[j]))
    for k in range(n - 1):
        out.append(wedge(units[k], units[n + k]) - wedge(units[k + 1], units[n + k + 1]))
    return out


def lambda2o_basis(cfg: GrassmannConfig) -> dict[str, list[Lambda2oElement]]:
    """Basis of ``Lambda^2_0 V`` grouped by component: scalar, H, HE, E."""
    z = Lambda2oElement.zero(cfg)
    n, m = 2 * cfg.r, 2 * cfg.s
    out = {"scalar": [Lambda2oElement(Fraction(1), z.bH, z.t, z.bE)]}
    out["H"] = [Lambda2oElement(Fraction(0), b, z.t, z.bE) for b in _lambda2o_basis_single(cfg.H)]
    out["HE"] = [Lambda2oElement(Fraction(0), z.bH,
                                 RatMatrix(n, m, [int(k == i * m + j) for k in range(n * m)]), z.bE)
                 for i in range(n) for j in range(m)]
    out["E"] = [Lambda2oElement(Fraction(0), z.bH, z.t, b) for b in _lambda2o_basis_single(cfg.E)]
    return out


# -- the action of sp(V) = Sym^2 V ----------------------------------------------------------

def action_endomorphism(sigma_matrix: RatMatrix, u: Sequence, v: Sequence) -> list[tuple[int, int, Fraction]]:
    """Sparse entries of ``z -> sigma(v, z) u + sigma(u, z) v``."""
    N = sigma_matrix.rows
    vJ = [sum((v[i] * sigma_matrix[i, k] for i in range(N) if v[i]), Fraction(0)) for k in range(N)]
    uJ = [sum((u[i] * sigma_matrix[i, k] for i in range(N) if u[i]), Fraction(0)) for k in range(N)]
    M: dict[tuple[int, int], Fraction] = {}
    for i in range(N):
        for k in range(N):
            x = u[i] * vJ[k] + v[i] * uJ[k]
            if x:
                M[i, k] = x
    return [(i, k, x) for (i, k), x in M.items() if x]


def act_on_bivector(M: list[tuple[int, int, Fraction]], W: RatMatrix) -> RatMatrix:
    """``M W + W M^T``, the derivation action on ``x ^ y``."""
    N = W.rows
    P = [[Fraction(0)] * N for _ in range(N)]
    for i, k, x in M:
        row = W.row(k)
        Pi = P[i]
        for j in range(N):
            if row[j]:
                Pi[j] += x * row[j]
    return RatMatrix(N, N, [P[i][j] - P[j][i] for i in range(N) for j in range(N)])


def sp_action(cfg: GrassmannConfig, X: tuple[Sequence, Sequence], w: Lambda2oElement) -> Lambda2oElement:
    """Action of the symmetric product ``u . v`` in ``Sym^2 V`` on ``Lambda^2_0 V``."""
    u, v = X
    M = action_endomorphism(cfg.sigma_V, u, v)
    return from_bivector(cfg, act_on_bivector(M, to_bivector(cfg, w)))


# -- symmetric forms on H (x) E -------------------------------------------------------------

@dataclass(frozen=True)
class Sym2Form:
    matrix: RatMatrix

    def __post_init__(self):
        if not self.matrix.is_symmetric():
            raise ValueError("form is not symmetric")

    def contract(self, z: Sequence) -> list[Fraction]:
        """``z -| F``: contraction in the first slot."""
        return contract(self.matrix.entries, self.matrix.cols, z)


def contract(entries: Sequence, n: int, z: Sequence) -> list[Fraction]:
    out = [Fraction(0)] * n
    for a, za in enumerate(z):
        if za:
            row = entries[a * n:(a + 1) * n]
            for b in range(n):
                if row[b]:
                    out[b] += za * row[b]
    return out


def tensor(x: Sequence, y: Sequence) -> list:
    return [a * b for a in x for b in y]


def _sym(phi: Sequence, psi: Sequence) -> list:
    n = len(phi)
    return [phi[i] * psi[j] + psi[i] * phi[j] for i in range(n) for j in range(n)]


def _add_into(acc: list, m: Sequence, c=1) -> None:
    for k, x in enumerate(m):
        if x:
            acc[k] += c * x


SparseForm = dict  # row index -> {column index: value}


def _sparse(v: Sequence) -> list[tuple[int, Fraction]]:
    return [(i, x) for i, x in enumerate(v) if x]


def _add_sym(acc: SparseForm, phi: Sequence, psi: Sequence, c=1) -> None:
    """``acc += c * (phi (x) psi + psi (x) phi)`` on sparse rows."""
    p, q = _sparse(phi), _sparse(psi)
    for i, a in p:
        for j, b in q:
            x = c * a * b
            ri, rj = acc.setdefault(i, {}), acc.setdefault(j, {})
            ri[j] = ri.get(j, 0) + x
            rj[i] = rj.get(i, 0) + x


def _prune(acc: SparseForm) -> SparseForm:
    out = {}
    for i, row in acc.items():
        row = {j: Fraction(x) for j, x in row.items() if x}
        if row:
            out[i] = row
    return out


def _dense(form: SparseForm, n: int) -> RatMatrix:
    entries = [Fraction(0)] * (n * n)
    for i, row in form.items():
        for j, x in row.items():
            entries[i * n + j] = x
    return RatMatrix(n, n, entries)


@lru_cache(maxsize=None)
def _correction_form(r: int, s: int) -> SparseForm:
    """``sum_{alpha mu} (dh_alpha (x) de_mu) . (h_alpha^flat (x) e_mu^flat)``."""
    cfg = GrassmannConfig(r, s)
    H, E = cfg.H, cfg.E
    acc: SparseForm = {}
    for h in H.basis():
        hf = H.flat(h)
        for e in E.basis():
            _add_sym(acc, tensor(h, e), tensor(hf, E.flat(e)))
    return _prune(acc)


@lru_cache(maxsize=None)
def _basis_forms(r: int, s: int, which: str) -> dict[tuple[int, int], SparseForm]:
    """``F(u_i ^ u_j)`` for ``i < j`` on the factor ``which``, as sparse rows."""
    cfg = GrassmannConfig(r, s)
    H, E = cfg.H, cfg.E
    own, other = (H, E) if which == "H" else (E, H)
    K = _correction_form(r, s)
    units = own.basis()
    out = {}
    for i in range(own.dim):
        for j in range(i + 1, own.dim):
            a, ah = units[i], units[j]
            af, ahf = own.flat(a), own.flat(ah)
            acc: SparseForm = {}
            for x in other.basis():
                xf = other.flat(x)
                if which == "H":
                    _add_sym(acc, tensor(af, x), tensor(ahf, xf))
                else:
                    _add_sym(acc, tensor(x, af), tensor(xf, ahf))
            c = -Fraction(own.sigma(a, ah)) / own.dim
            if c:
                for row, cols in K.items():
                    racc = acc.setdefault(row, {})
                    for col, y in cols.items():
                        racc[col] = racc.get(col, 0) + c * y
            out[i, j] = _prune(acc)
    return out


def F_bivector(cfg: GrassmannConfig, which: Which, W: RatMatrix) -> Sym2Form:
    """The defining formula of ``F^H`` (or ``F^E``) applied to any bivector of that factor."""
    forms = _basis_forms(cfg.r, cfg.s, which)
    acc: SparseForm = {}
    for (i, j), f in forms.items():
        c = W[i, j]
        if c:
            for row, cols in f.items():
                racc = acc.setdefault(row, {})
                for col, y in cols.items():
                    racc[col] = racc.get(col, 0) + c * y
    return Sym2Form(_dense(_prune(acc), cfg.dim_HE))


def FH(cfg: GrassmannConfig, w: Lambda2oElement) -> Sym2Form:
    return F_bivector(cfg, "H", w.bH)


def FE(cfg: GrassmannConfig, w: Lambda2oElement) -> Sym2Form:
    return F_bivector(cfg, "E", w.bE)


def metric_HE(cfg: GrassmannConfig) -> RatMatrix:
    """Gram matrix of ``sigma_H (x) sigma_E`` on ``H (x) E``."""
    JH, JE = cfg.H.omega, cfg.E.omega
    n, m = JH.rows, JE.rows
    return RatMatrix(n * m, n * m, [JH[i, k] * JE[j, l] for i in range(n) for j in range(m)
                                    for k in range(n) for l in range(m)])


def metric_trace(cfg: GrassmannConfig, F: Sym2Form) -> Fraction:
    from .ratlin import inverse

    Ginv = inverse(metric_HE(cfg))
    return sum((a * b for a, b in zip(Ginv.entries, F.matrix.entries) if a and b), Fraction(0))


def flat_HE(cfg: GrassmannConfig, t: RatMatrix) -> list[Fraction]:
    """Flat of a tensor in ``H (x) E`` as a covector, ``(a (x) f)^flat = a^flat (x) f^flat``."""
    JH, JE = cfg.H.omega, cfg.E.omega
    return (JH.T @ t @ JE).entries


# -- divergence ------------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _replacement_pairs(r: int, s: int) -> tuple:
    """``(dh_alpha^# (x) de_mu^#, action of h_alpha . e_mu)`` for all basis pairs."""
    cfg = GrassmannConfig(r, s)
    out = []
    for a, h in enumerate(cfg.H.basis()):
        for m_, e in enumerate(cfg.E.basis()):
            z = tensor(cfg.H.sharp_duals[a], cfg.E.sharp_duals[m_])
            M = action_endomorphism(cfg.sigma_V, cfg.embed_H(h), cfg.embed_E(e))
            out.append((tuple(_sparse(z)), tuple(M)))
    return tuple(out)


def _act_sparse(M, rows: dict[int, dict[int, Fraction]]) -> dict[tuple[int, int], Fraction]:
    """Upper-triangle entries of ``M W + W M^T`` for a sparse bivector ``W``."""
    P: dict[tuple[int, int], Fraction] = {}
    for i, k, x in M:
        for j, y in rows.get(k, {}).items():
            P[i, j] = P.get((i, j), 0) + x * y
    out = {}
    for (i, j), x in P.items():
        if i != j:
            a, b = (i, j) if i < j else (j, i)
            sgn = 1 if i < j else -1
            out[a, b] = out.get((a, b), 0) + sgn * x
    return out


def divergence_covector(cfg: GrassmannConfig, which: Which | None, w: Lambda2oElement,
                        weights: tuple = (1, 0)) -> list[Fraction]:
    """``(D*F)(w)^flat`` for ``F = weights[0] F^H + weights[1] F^E``.

    ``which`` selects a single generator and overrides ``weights`` when given.
    """
    if which is not None:
        weights = (1, 0) if which == "H" else (0, 1)
    nH = 2 * cfg.r
    gens = [(c, _basis_forms(cfg.r, cfg.s, k), 0 if k == "H" else nH, nH if k == "H" else cfg.dim_V)
            for c, k in zip(weights, ("H", "E")) if c]
    W = to_bivector(cfg, w)
    N = cfg.dim_V
    rows = {}
    for i in range(N):
        row = {j: x for j, x in enumerate(W.row(i)) if x}
        if row:
            rows[i] = row
    out = [Fraction(0)] * cfg.dim_HE
    for z, M in _replacement_pairs(cfg.r, cfg.s):
        moved = _act_sparse(M, rows)
        for c, forms, lo, hi in gens:
            for (i, j), x in moved.items():
                # F kills the symplectic bivector, so the raw block needs no projection
                if not x or not (lo <= i < hi and lo <= j < hi):
                    continue
                f = forms[i - lo, j - lo]
                for a, za in z:
                    for b, y in f.get(a, {}).items():
                        out[b] += c * x * za * y
    return out


def divergence_covector_slow(cfg: GrassmannConfig, which: Which, w: Lambda2oElement) -> list[Fraction]:
    """Same as :func:`divergence_covector`, through ``sp_action`` and full ``F`` evaluations."""
    F = FH if which == "H" else FE
    out = [Fraction(0)] * cfg.dim_HE
    for a, h in enumerate(cfg.H.basis()):
        for m_, e in enumerate(cfg.E.basis()):
            moved = sp_action(cfg, (cfg.embed_H(h), cfg.embed_E(e)), w)
            z = tensor(cfg.H.sharp_duals[a], cfg.E.sharp_duals[m_])
            _add_into(out, F(cfg, moved).contract(z))
    return out


class NotProportional(ArithmeticError):
    pass


def _proportionality(vec: Sequence, ref: Sequence) -> Fraction:
    k = next((i for i, x in enumerate(ref) if x), None)
    if k is None:
        raise ValueError("reference vector is zero")
    c = Fraction(vec[k]) / ref[k]
    if any(x != c * y for x, y in zip(vec, ref)):
        raise NotProportional("divergence is not a multiple of the canonical projection")
    return c


def divergence_coefficient(cfg: GrassmannConfig, which: Which | None = None,
                           weights: tuple = (1, 0), check_complement: bool = True) -> Fraction:
    """Scalar ``c`` with ``(D*F)(w)^flat = c * t(w)^flat`` on all of ``Lambda^2_0 V``.

    Raises :class:`NotProportional` when the assembled map is not of that shape.
    """
    basis = lambda2o_basis(cfg)
    coeffs = set()
    for w in basis["HE"]:
        coeffs.add(_proportionality(divergence_covector(cfg, which, w, weights), flat_HE(cfg, w.t)))
    if len(coeffs) != 1:
        raise NotProportional(f"inconsistent coefficients {sorted(coeffs)}")
    if check_complement:
        for key in ("scalar", "H", "E"):
            for w in basis[key]:
                if any(divergence_covector(cfg, which, w, weights)):
                    raise NotProportional(f"nonzero divergence on the {key} component")
    return coeffs.pop()


def closed_form_coefficient(cfg: GrassmannConfig, which: Which) -> Fraction:
    """Reference values ``-(r-1)(2r+1)/r`` and ``(s-1)(2s+1)/s``; not used by the assembly."""
    if which == "H":
        return -Fraction((cfg.r - 1) * (2 * cfg.r + 1), cfg.r)
    return Fraction((cfg.s - 1) * (2 * cfg.s + 1), cfg.s)


# -- stability -------------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilityVerdict:
    r: int
    s: int
    coeff_H: Fraction
    coeff_E: Fraction
    hom_dim: int
    rank: int
    verdict: str
    kernel_witness: tuple[Fraction, ...] | None
    generators: tuple[str, ...]

    @property
    def stable(self) -> bool:
        return self.verdict == "stable"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "coeff_H": fmt(self.coeff_H),
            "coeff_E": fmt(self.coeff_E),
            "hom_dim": self.hom_dim,
            "rank": self.rank,
            "verdict": self.verdict,
            "kernel_witness": None if self.kernel_witness is None else [fmt(x) for x in self.kernel_witness],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _primitive(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    from math import gcd, lcm

    d = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * d) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    sign = -1 if next(x for x in ints if x) < 0 else 1
    return tuple(Fraction(sign * x // g) for x in ints)


def stability_verdict(r: int, s: int, check_complement: bool = True) -> StabilityVerdict:
    """Decide stability of ``Gr_r(H^{r+s})`` from the rank of the divergence.

    The candidate infinitesimal deformations form the span of the nonzero
    generators among ``F^H`` and ``F^E``; the divergence maps this span to a
    one-dimensional Hom space.  A nonzero kernel means unstable.
    """
    cfg = GrassmannConfig(r, s)
    cH = divergence_coefficient(cfg, "H", check_complement=check_complement)
    cE = divergence_coefficient(cfg, "E", check_complement=check_complement)
    gens = tuple(name for name, k in (("F^H", r), ("F^E", s)) if k >= 2)
    row = [c for name, c in (("F^H", cH), ("F^E", cE)) if name in gens]
    d = len(row)
    rk = rank(RatMatrix(1, d, row)) if d else 0
    witness = None
    if d > rk:
        ker = kernel_basis(RatMatrix(1, d, row))
        witness = _primitive(ker[0])
    return StabilityVerdict(r, s, cH, cE, d, rk, "unstable" if witness else "stable", witness, gens)


def verify_witness(v: StabilityVerdict) -> bool:
    """Assemble the divergence of the witness combination and check that it vanishes."""
    if v.kernel_witness is None:
        return False
    cfg = GrassmannConfig(v.r, v.s)
    weights = dict(zip(v.generators, v.kernel_witness))
    wts = (weights.get("F^H", 0), weights.get("F^E", 0))
    return all(not any(divergence_covector(cfg, None, w, wts))
               for ws in lambda2o_basis(cfg).values() for w in ws)
